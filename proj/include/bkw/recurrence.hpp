#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bkw/poly_core.hpp"

namespace bkw {

/// P_{n+k}(x) = -sum_{i=1}^{k} f_i(x) P_{n+k-i}(x).
///
/// f[i-1] holds f_i; initials[j] holds P_{j+1}.
struct Recurrence {
  int order = 0;
  std::vector<ComplexPoly> f;
  std::vector<ComplexPoly> initials;
};

/// Coefficients (ascending in y) of prod_i (y - lambda_i(x))^{m_i}, m_i = deg_n(alpha_i) + 1.
std::vector<ComplexPoly> characteristic_poly(const ExpSumFamily& family);

Recurrence to_recurrence(const ExpSumFamily& family);

/// P_1 .. P_{n_max}. Throws std::invalid_argument if n_max < order or the
/// recurrence is malformed.
std::vector<ComplexPoly> generate_sequence(const Recurrence& rec, int n_max);

struct MinimalityReport {
  bool pass = true;
  /// Index pairs (i, j), i < j, whose lambdas coincide.
  std::vector<std::pair<int, int>> duplicate_lambdas;
  /// Terms whose alpha has no nonzero leading coefficient.
  std::vector<int> zero_leading;
};

/// Works on a raw term list so that unmerged input can be diagnosed.
MinimalityReport minimality_check(std::span<const ExpTerm> terms);
MinimalityReport minimality_check(const ExpSumFamily& family);

}  // namespace bkw
