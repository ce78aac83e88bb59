#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bkw/poly_core.hpp"
#include "bkw/recurrence.hpp"

namespace bkw {

/// Rectangular region of the complex plane sampled by a grid of cells.
struct Window {
  double re_min = -3.0;
  double re_max = 3.0;
  double im_min = -3.0;
  double im_max = 3.0;
  int grid = 512;

  /// Throws std::invalid_argument unless re_min < re_max, im_min < im_max, grid >= 16.
  void validate() const;
  bool contains(cplx z) const;
  double cell_width() const { return (re_max - re_min) / grid; }
  double cell_height() const { return (im_max - im_min) / grid; }
  double cell_diagonal() const;
  cplx node(int ix, int iy) const;

  friend bool operator==(const Window&, const Window&) = default;
};

/// Either a strictly dominant term index or the set of terms tied for the max modulus.
struct Dominance {
  std::optional<int> index;
  std::vector<int> tied;
};

Dominance dominant_index(const ExpSumFamily& family, cplx z, double tie_tol = 1e-9);

struct IsolatedPoint {
  cplx point;
  int term;
};

/// Zeros of each leading n-coefficient inside the window at which that term
/// strictly dominates. Where every |lambda| < 1e-9 dominance is decided on 8
/// probes at radius 1e-3, which must agree.
std::vector<IsolatedPoint> isolated_limit_points(const ExpSumFamily& family, const Window& window);

/// Common zeros (within 1e-7) of P_n for every probe index that are not
/// already accounted for by a strictly dominant vanishing leading coefficient
/// or by a positive-modulus tie, e.g. a point where every lambda vanishes.
/// Throws std::invalid_argument for fewer than two distinct probes.
std::vector<cplx> persistent_zeros(const ExpSumFamily& family, const std::vector<long>& probe_indices = {17, 18, 19});

/// A polyline on the equimodular locus |lambda_i| = |lambda_j| (0-based term
/// indices, i < j). Closed loops repeat their first point at the end.
struct Curve {
  std::pair<int, int> pair;
  std::vector<cplx> points;
};

/// Marching-squares extraction of |lambda_i| = |lambda_j| for every term pair.
/// Each sign-changing grid edge is bisected to full precision, then kept only
/// if the pair's common modulus is positive, no other term exceeds it by more
/// than a relative 1e-9, and at least one of the two leading coefficients is
/// nonzero there. Kept crossings that share a grid cell are chained.
std::vector<Curve> equimodular_curves(const ExpSumFamily& family, const Window& window);

struct LimitSet {
  Window window;
  std::vector<IsolatedPoint> isolated;
  std::vector<cplx> persistent;
  std::vector<Curve> curves;

  bool empty() const { return isolated.empty() && persistent.empty() && curves.empty(); }
};

/// Throws std::invalid_argument if the family fails nondegeneracy_check.
LimitSet limit_set(const ExpSumFamily& family, const Window& window = {});

struct NondegeneracyReport {
  bool pass = true;
  /// Pairs with |lambda_i / lambda_j| constant over the samples.
  std::vector<std::pair<int, int>> constant_ratio_pairs;
  MinimalityReport minimality;
};

NondegeneracyReport nondegeneracy_check(const ExpSumFamily& family, int sample_count = 32, const Window& window = {},
                                        unsigned seed = 2024);

}  // namespace bkw
