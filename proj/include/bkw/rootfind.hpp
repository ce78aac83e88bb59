#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bkw/poly_core.hpp"

namespace bkw {

inline constexpr double kDefaultRootTol = 1e-10;
inline constexpr int kDefaultMaxIterations = 200;

/// All zeros of one polynomial, sorted by real part then imaginary part.
/// residuals[i] = |P(r)| / (max|coeff(P)| * max(1, |r|)^deg P), r = roots[i];
/// inside the closed unit disk this is |P(r)| / max|coeff(P)|.
struct RootSet {
  long n = 0;
  std::vector<cplx> roots;
  std::vector<double> residuals;

  double worst_residual() const;
};

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, double worst_residual)
      : std::runtime_error(what), worst_residual_(worst_residual) {}
  double worst_residual() const { return worst_residual_; }

 private:
  double worst_residual_;
};

/// Value and derivative of a polynomial at a point, plus the magnitude scale
/// that bounds the rounding error of the evaluation (sum of |summands|).
struct PolyEval {
  cplx value;
  cplx derivative;
  double scale;
};

using Evaluator = std::function<PolyEval(cplx)>;

/// Horner evaluator for p.
Evaluator horner_evaluator(const ComplexPoly& p);

/// Evaluates P_n from the term form, which stays accurate where the dense
/// expansion loses digits to cancellation (e.g. n(1+x)^n near x = -2).
Evaluator family_evaluator(const ExpSumFamily& family, long n);

/// Every zero of p with multiplicity.
///
/// Exact-zero low-order coefficients are deflated as roots at 0. The rest are
/// found by Aberth-Ehrlich simultaneous iteration started from circles whose
/// radii come from the Newton polygon of the coefficient moduli, followed by
/// one Newton polishing step per root. `eval` must evaluate the same
/// polynomial as p; the coefficients of p drive the start points, the root
/// count and the residual normalization.
///
/// Throws std::invalid_argument for the zero or a constant polynomial and
/// RootFindingError if the iteration does not converge within max_iterations
/// or a residual is not below tol.
RootSet all_roots(const ComplexPoly& p, double tol = kDefaultRootTol, int max_iterations = kDefaultMaxIterations);
RootSet all_roots(const ComplexPoly& p, const Evaluator& eval, double tol = kDefaultRootTol,
                  int max_iterations = kDefaultMaxIterations);

/// Roots of P_n for n_from <= n <= n_to, one RootSet per n in increasing n.
std::vector<RootSet> family_roots(const ExpSumFamily& family, long n_from, long n_to, double tol = kDefaultRootTol);

/// Number of zeros of p strictly inside |z - center| < radius, by the argument
/// principle. The circle is refined until every argument increment between
/// consecutive samples is below pi/2. Throws std::domain_error("root on
/// contour") if |p| < 1e-10 max|coeff| at a sample.
int winding_count(const ComplexPoly& p, cplx center, double radius);

}  // namespace bkw
