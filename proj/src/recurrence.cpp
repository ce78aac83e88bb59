#include "bkw/recurrence.hpp"

#include <stdexcept>
#include <string>

namespace bkw {

namespace {

using YPoly = std::vector<ComplexPoly>;  // ascending powers of y

YPoly ymul(const YPoly& a, const YPoly& b) {
  YPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

std::vector<ComplexPoly> characteristic_poly(const ExpSumFamily& family) {
  YPoly result{ComplexPoly::constant(1.0)};
  for (const auto& term : family.terms()) {
    const YPoly factor{-term.lambda, ComplexPoly::constant(1.0)};
    const int multiplicity = term.alpha.n_degree() + 1;
    for (int m = 0; m < multiplicity; ++m) result = ymul(result, factor);
  }
  return result;
}

Recurrence to_recurrence(const ExpSumFamily& family) {
  const auto chi = characteristic_poly(family);
  const int k = static_cast<int>(chi.size()) - 1;
  Recurrence rec;
  rec.order = k;
  rec.f.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) rec.f.push_back(chi[static_cast<std::size_t>(k - i)]);
  rec.initials.reserve(static_cast<std::size_t>(k));
  for (int n = 1; n <= k; ++n) rec.initials.push_back(expand_at_index(family, n));
  return rec;
}

std::vector<ComplexPoly> generate_sequence(const Recurrence& rec, int n_max) {
  const int k = rec.order;
  if (k < 1 || static_cast<int>(rec.f.size()) != k || static_cast<int>(rec.initials.size()) != k)
    throw std::invalid_argument("generate_sequence: malformed recurrence");
  if (rec.f.back().is_zero()) throw std::invalid_argument("generate_sequence: f_k is the zero polynomial");
  if (n_max < k)
    throw std::invalid_argument("generate_sequence: n_max " + std::to_string(n_max) + " below order " +
                                std::to_string(k));
  std::vector<ComplexPoly> seq(rec.initials.begin(), rec.initials.end());
  seq.reserve(static_cast<std::size_t>(n_max));
  for (int n = k; n < n_max; ++n) {
    ComplexPoly next;
    for (int i = 1; i <= k; ++i) next -= rec.f[static_cast<std::size_t>(i - 1)] * seq[static_cast<std::size_t>(n - i)];
    seq.push_back(std::move(next));
  }
  return seq;
}

MinimalityReport minimality_check(std::span<const ExpTerm> terms) {
  MinimalityReport report;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].alpha.is_zero() || terms[i].alpha.leading().is_zero()) report.zero_leading.push_back(static_cast<int>(i));
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (terms[i].lambda == terms[j].lambda) report.duplicate_lambdas.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  report.pass = report.duplicate_lambdas.empty() && report.zero_leading.empty();
  return report;
}

MinimalityReport minimality_check(const ExpSumFamily& family) { return minimality_check(family.terms()); }

}  // namespace bkw
