#pragma once

#include <optional>
#include <vector>

#include "bkw/limitset.hpp"
#include "bkw/rootfind.hpp"

namespace bkw {

/// Euclidean distance from z to the nearest isolated point, persistent zero or
/// curve segment; +inf for an empty limit set.
double distance_to_limit_set(const LimitSet& limits, cplx z);

struct IndexDistance {
  long n;
  double max_dist;
  double mean_dist;
};

struct CoveragePoint {
  cplx point;
  double distance;  // to the nearest root of P_{n_to}
};

struct ConvergenceReport {
  std::vector<IndexDistance> per_n;
  std::vector<CoveragePoint> coverage;
  /// max_dist(n_to) / max_dist(n_from); values below 1 indicate convergence.
  double trend = 1.0;
  /// The limit set actually measured against (grown if roots left its window).
  LimitSet limits;

  double max_coverage_distance() const;
};

/// Measures roots of P_n, n_from <= n <= n_to, against the limit set. If any
/// root lies outside limits.window the limit set is recomputed on a window
/// that contains every root.
ConvergenceReport convergence_report(const ExpSumFamily& family, long n_from, long n_to, const LimitSet& limits,
                                     double tol = kDefaultRootTol);

/// | |alpha_1(N;z)|^(1/N) |lambda_1(z)| - |alpha_2(N;z)|^(1/N) |lambda_2(z)| | with
/// N = n + index_offset; this vanishes at every zero of P_n. Two-term
/// families only (std::invalid_argument otherwise); requires N >= 1.
double converse_residual(const ExpSumFamily& family, cplx z, long n);

/// converse_residual, or nullopt when some |alpha_i(N; z)| is within rounding
/// error of zero. Its N-th root is then meaningless in double precision (g's
/// roots near 0 have |alpha_2| ~ 1e-91 at n = 40).
std::optional<double> resolved_converse_residual(const ExpSumFamily& family, cplx z, long n);

}  // namespace bkw
