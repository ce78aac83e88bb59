#include "bkw/families.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace bkw {

namespace {

ComplexPoly real_poly(std::initializer_list<double> c) {
  std::vector<cplx> v(c.begin(), c.end());
  return ComplexPoly(std::move(v));
}

const ComplexPoly kOne = real_poly({1});
const ComplexPoly kX = real_poly({0, 1});

}  // namespace

FamilySpec make_f() {
  // (x - 2) x^n + (n^2 + x^2) 1^n
  ExpSumFamily fam("f",
                   {
                       {NCoeffPoly{real_poly({-2, 1})}, kX},
                       {NCoeffPoly{real_poly({0, 0, 1}), ComplexPoly{}, real_poly({1})}, kOne},
                   });
  auto direct = [](long n, cplx z) {
    const double nd = static_cast<double>(n);
    return ipow(z, n + 1) - 2.0 * ipow(z, n) + z * z + nd * nd;
  };
  return {std::move(fam), direct, "f_n(x) = x^{n+1} - 2x^n + x^2 + n^2", 1};
}

FamilySpec make_g() {
  // (x - 2) x^n + (n^2 x^2 + 5 n x + 1) 1^n
  ExpSumFamily fam("g",
                   {
                       {NCoeffPoly{real_poly({-2, 1})}, kX},
                       {NCoeffPoly{real_poly({1}), real_poly({0, 5}), real_poly({0, 0, 1})}, kOne},
                   });
  auto direct = [](long n, cplx z) {
    const double nd = static_cast<double>(n);
    return ipow(z, n + 1) - 2.0 * ipow(z, n) + nd * nd * z * z + 5.0 * nd * z + 1.0;
  };
  return {std::move(fam), direct, "g_n(x) = x^{n+1} - 2x^n + n^2x^2 + 5nx + 1", 1};
}

FamilySpec make_steele_cycle() {
  // 1 * t^n + (n(1 - t) - 1) * 1^n
  ExpSumFamily fam("steele_cycle",
                   {
                       {NCoeffPoly{kOne}, kX},
                       {NCoeffPoly{real_poly({-1}), real_poly({1, -1})}, kOne},
                   });
  auto direct = [](long n, cplx t) {
    const double nd = static_cast<double>(n);
    return ipow(t, n) - nd * t + (nd - 1.0);
  };
  return {std::move(fam), direct, "S(C_n; t) = t^n - nt + (n-1)", 1};
}

FamilySpec make_independence() {
  // n (1 + x)^n + (1 - n) 1^n
  ExpSumFamily fam("independence",
                   {
                       {NCoeffPoly{ComplexPoly{}, kOne}, real_poly({1, 1})},
                       {NCoeffPoly{real_poly({1}), real_poly({-1})}, kOne},
                   });
  auto direct = [](long n, cplx x) {
    const double nd = static_cast<double>(n);
    return nd * ipow(1.0 + x, n) - (nd - 1.0);
  };
  return {std::move(fam), direct, "i(K_{n,...,n}, x) = n(1+x)^n - (n-1)", 1};
}

FamilySpec make_screl() {
  // With N = n - 1: 2p * p^N + (N(1-p)^2 + 1 - 2p) * (p^2)^N.
  // The literal term form 2p^2 * p^N + (N(1-p)^2 + (1-p)^2) (p^2)^N does not
  // reproduce the closed form; see make_screl_literal.
  ExpSumFamily fam("screl",
                   {
                       {NCoeffPoly{real_poly({0, 2})}, kX},
                       {NCoeffPoly{real_poly({1, -2}), real_poly({1, -2, 1})}, real_poly({0, 0, 1})},
                   },
                   -1);
  auto direct = [](long n, cplx p) {
    const double nd = static_cast<double>(n);
    return 2.0 * ipow(p, n) - ipow(p, 2 * n) + nd * (1.0 - p) * (1.0 - p) * ipow(p, 2 * n - 2);
  };
  return {std::move(fam), direct, "screl(C_n<->, p) = 2p^n - p^{2n} + n(1-p)^2 p^{2n-2}", 1};
}

FamilySpec make_screl_literal() {
  FamilySpec spec = make_screl();
  spec.family = ExpSumFamily("screl_literal",
                             {
                                 {NCoeffPoly{real_poly({0, 0, 2})}, kX},
                                 {NCoeffPoly{real_poly({1, -2, 1}), real_poly({1, -2, 1})}, real_poly({0, 0, 1})},
                             },
                             -1);
  return spec;
}

FamilySpec make_domination() {
  // With N = n - 1, identified coefficientwise in N from the closed form:
  //   (1+x)^2 ((1+x)^2)^N + (-2xN - 4x - 2)(1+x)^N + 2x x^N
  //   + (x^2 N^2 + (x^2 + 2x) N + 1 + 2x) 1^N
  ExpSumFamily fam("domination",
                   {
                       {NCoeffPoly{real_poly({1, 2, 1})}, real_poly({1, 2, 1})},
                       {NCoeffPoly{real_poly({-2, -4}), real_poly({0, -2})}, real_poly({1, 1})},
                       {NCoeffPoly{real_poly({0, 2})}, kX},
                       {NCoeffPoly{real_poly({1, 2}), real_poly({0, 2, 1}), real_poly({0, 0, 1})}, kOne},
                   },
                   -1);
  auto direct = [](long n, cplx x) {
    const double nd = static_cast<double>(n);
    const cplx head = ipow(1.0 + x, n) - 1.0 - nd * x;
    return head * head + 2.0 * ipow(x, n) + 2.0 * nd * x * x * (ipow(1.0 + x, n - 1) - 1.0) + nd * x * x;
  };
  return {std::move(fam), direct,
          "B_n(x) = ((1+x)^n - 1 - nx)^2 + 2x^n + 2nx^2((1+x)^{n-1} - 1) + nx^2", 2};
}

FamilySpec make_domination_literal() {
  FamilySpec spec = make_domination();
  spec.family = ExpSumFamily("domination_literal",
                             {
                                 {NCoeffPoly{real_poly({1, 2, 1})}, real_poly({1, 2, 1})},
                                 {NCoeffPoly{real_poly({-4, -4, 2}), real_poly({-2, -2, 2})}, real_poly({1, 1})},
                                 {NCoeffPoly{real_poly({0, 2})}, kX},
                                 {NCoeffPoly{real_poly({0, 0, 3}), real_poly({0, 0, 3}), real_poly({0, 0, 1})}, kOne},
                             },
                             -1);
  return spec;
}

const std::vector<std::string>& builtin_family_names() {
  static const std::vector<std::string> names = {"f", "g", "steele_cycle", "independence", "screl", "domination"};
  return names;
}

std::optional<FamilySpec> find_family(const std::string& name) {
  if (name == "f") return make_f();
  if (name == "g") return make_g();
  if (name == "steele_cycle") return make_steele_cycle();
  if (name == "independence") return make_independence();
  if (name == "screl") return make_screl();
  if (name == "domination") return make_domination();
  return std::nullopt;
}

std::vector<FamilySpec> all_families() {
  return {make_f(), make_g(), make_steele_cycle(), make_independence(), make_screl(), make_domination()};
}

ConsistencyReport consistency_check(const FamilySpec& spec, long n_from, long n_to, int sample_count, double tol,
                                    unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<cplx> points;
  points.reserve(static_cast<std::size_t>(sample_count));
  for (int k = 0; k < sample_count; ++k) points.push_back(std::polar(1.25 * std::sqrt(radius(rng)), angle(rng)));

  ConsistencyReport report;
  for (long n = std::max(n_from, spec.n_min); n <= n_to; ++n) {
    const ComplexPoly expanded = expand_at_index(spec.family, n);
    for (const cplx z : points) {
      const cplx a = expanded(z);
      const cplx b = spec.direct_eval(n, z);
      const double denom = std::max({std::abs(a), std::abs(b), 1e-300});
      const double dev = std::abs(a - b) / denom;
      if (dev > report.max_rel_deviation) {
        report.max_rel_deviation = dev;
        report.worst_n = n;
        report.worst_z = z;
      }
    }
  }
  report.pass = report.max_rel_deviation < tol;
  return report;
}

}  // namespace bkw
