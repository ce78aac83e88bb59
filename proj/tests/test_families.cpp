#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "bkw/families.hpp"

using namespace bkw;

namespace {

// Domination polynomial of K_{n,n} minus a perfect matching by subset enumeration.
std::vector<double> cocktail_domination(int n) {
  const int v = 2 * n;
  auto adjacent = [n](int a, int b) {
    const bool left_a = a < n, left_b = b < n;
    return left_a != left_b && (a % n) != (b % n);
  };
  std::vector<double> coeff(static_cast<std::size_t>(v) + 1, 0.0);
  for (unsigned mask = 0; mask < (1u << v); ++mask) {
    bool dominating = true;
    for (int u = 0; u < v && dominating; ++u) {
      if (mask >> u & 1u) continue;
      bool hit = false;
      for (int w = 0; w < v && !hit; ++w) hit = (mask >> w & 1u) && adjacent(u, w);
      dominating = hit;
    }
    if (dominating) coeff[static_cast<std::size_t>(__builtin_popcount(mask))] += 1.0;
  }
  return coeff;
}

// screl of the doubled n-cycle: sum over strongly connected arc subsets of p^k (1-p)^(2n-k).
cplx doubled_cycle_screl(int n, cplx p) {
  const int arcs = 2 * n;  // arc 2k: k -> k+1, arc 2k+1: k+1 -> k
  cplx total = 0;
  for (unsigned mask = 0; mask < (1u << arcs); ++mask) {
    auto reach_all = [&](bool forward) {
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int k = 0; k < n; ++k) {
          const int a = k, b = (k + 1) % n;
          auto step = [&](int from, int to, int arc) {
            const bool on = mask >> arc & 1u;
            const int src = forward ? from : to, dst = forward ? to : from;
            if (on && src == u && !seen[dst]) {
              seen[dst] = 1;
              stack.push_back(dst);
            }
          };
          step(a, b, 2 * k);
          step(b, a, 2 * k + 1);
        }
      }
      return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    };
    if (reach_all(true) && reach_all(false)) {
      const int k = __builtin_popcount(mask);
      total += std::pow(p, k) * std::pow(1.0 - p, arcs - k);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("built-in names and lookup") {
  const auto& names = builtin_family_names();
  CHECK(names == std::vector<std::string>{"f", "g", "steele_cycle", "independence", "screl", "domination"});
  for (const auto& n : names) {
    const auto spec = find_family(n);
    REQUIRE(spec);
    CHECK(spec->family.name() == n);
    CHECK_FALSE(spec->citation.empty());
  }
  CHECK_FALSE(find_family("nope"));
  CHECK(all_families().size() == names.size());
}

TEST_CASE("closed-form spot values") {
  CHECK(make_independence().direct_eval(2, 0.0) == cplx(1.0));
  CHECK(std::abs(make_screl().direct_eval(3, 1.0) - 1.0) < 1e-15);
  CHECK(expand_at_index(make_steele_cycle().family, 3) == ComplexPoly{2.0, -3.0, 0.0, 1.0});
  for (long n = 1; n <= 10; ++n) {
    CHECK(expand_at_index(make_f().family, n).degree() == n + 1);
    CHECK(expand_at_index(make_g().family, n).degree() == n + 1);
  }
}

TEST_CASE("term forms agree with their closed forms") {
  CHECK(consistency_check(make_f(), 1, 12).pass);
  CHECK(consistency_check(make_g(), 1, 12).pass);
  CHECK(consistency_check(make_steele_cycle(), 2, 12).pass);
  CHECK(consistency_check(make_independence(), 1, 12).pass);
  CHECK(consistency_check(make_screl(), 3, 10).pass);
  CHECK(consistency_check(make_domination(), 2, 8).pass);
}

TEST_CASE("term forms as printed do not reproduce their closed forms") {
  const auto screl = consistency_check(make_screl_literal(), 3, 10);
  CHECK_FALSE(screl.pass);
  CHECK(screl.max_rel_deviation > 1e-3);
  const auto dom = consistency_check(make_domination_literal(), 2, 8);
  CHECK_FALSE(dom.pass);
  CHECK(dom.max_rel_deviation > 1e-3);
}

TEST_CASE("domination family equals subset enumeration on the cocktail graph") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto brute = cocktail_domination(n);
    const ComplexPoly p = expand_at_index(make_domination().family, n);
    REQUIRE(p.degree() == 2 * n);
    for (int k = 0; k <= 2 * n; ++k) CHECK(std::abs(p.coeff(k) - brute[static_cast<std::size_t>(k)]) < 1e-9);
  }
  // K_{2,2} minus a perfect matching is two disjoint edges, so B_2 = (x^2 + 2x)^2
  CHECK(expand_at_index(make_domination().family, 2) == ComplexPoly{0.0, 0.0, 4.0, 4.0, 1.0});
}

TEST_CASE("screl family equals arc-subset enumeration on the doubled cycle") {
  for (int n = 3; n <= 5; ++n) {
    CAPTURE(n);
    for (const cplx p : {cplx(0.3), cplx(0.8, 0.2), cplx(-0.5, 0.6)}) {
      const cplx want = doubled_cycle_screl(n, p);
      CHECK(std::abs(make_screl().family.evaluate(n, p) - want) < 1e-12);
      CHECK(std::abs(make_screl().direct_eval(n, p) - want) < 1e-12);
    }
  }
}

TEST_CASE("independence closed form against an independent transcription") {
  for (long n = 1; n <= 15; ++n)
    for (const cplx z : {cplx(0.2, 0.1), cplx(-1.3, 0.5)}) {
      const cplx want = static_cast<double>(n) * std::pow(1.0 + z, static_cast<int>(n)) - static_cast<double>(n - 1);
      CHECK(std::abs(expand_at_index(make_independence().family, n)(z) - want) < 1e-9 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("consistency report is deterministic for a fixed seed") {
  const auto a = consistency_check(make_domination_literal(), 2, 6, 10, 1e-9, 3);
  const auto b = consistency_check(make_domination_literal(), 2, 6, 10, 1e-9, 3);
  CHECK(a.max_rel_deviation == b.max_rel_deviation);
  CHECK(a.worst_n == b.worst_n);
  CHECK(a.worst_z == b.worst_z);
}
