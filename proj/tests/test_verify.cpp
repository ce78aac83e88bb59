#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bkw/families.hpp"
#include "bkw/verify.hpp"

using namespace bkw;

TEST_CASE("distance to the limit set") {
  LimitSet ls;
  CHECK(distance_to_limit_set(ls, 0.0) == std::numeric_limits<double>::infinity());
  ls.isolated.push_back({cplx(2, 0), 0});
  CHECK(distance_to_limit_set(ls, cplx(2, 1)) == doctest::Approx(1.0));
  ls.curves.push_back({{0, 1}, {cplx(-1, 0), cplx(1, 0)}});
  // Segment interior, not just the vertices.
  CHECK(distance_to_limit_set(ls, cplx(0, 0.25)) == doctest::Approx(0.25));
  CHECK(distance_to_limit_set(ls, cplx(-2, 0)) == doctest::Approx(1.0));
  ls.persistent.push_back(cplx(0, 3));
  CHECK(distance_to_limit_set(ls, cplx(0, 2.9)) == doctest::Approx(0.1));
}

TEST_CASE("independence family converges at the explicit rate") {
  const auto& fam = make_independence().family;
  const ConvergenceReport r = convergence_report(fam, 10, 40, limit_set(fam));
  REQUIRE(r.per_n.size() == 31);
  // Roots lie on |1+z| = ((n-1)/n)^(1/n); the curve is |1+z| = 1.
  const double expected = 1.0 - std::pow(39.0 / 40.0, 1.0 / 40.0);
  CHECK(r.per_n.back().max_dist == doctest::Approx(expected).epsilon(1e-4));
  CHECK(r.per_n.back().max_dist < 1e-3);
  CHECK(r.trend < 0.7);
  CHECK(r.max_coverage_distance() < 0.25);
  for (std::size_t k = 1; k < r.per_n.size(); ++k) CHECK(r.per_n[k].n == r.per_n[k - 1].n + 1);
}

TEST_CASE("Steele family converges to the unit circle") {
  const auto& fam = make_steele_cycle().family;
  const ConvergenceReport r = convergence_report(fam, 3, 40, limit_set(fam));
  CHECK(r.trend < 1.0);
  CHECK(r.max_coverage_distance() < 0.25);
}

TEST_CASE("single index gives trend 1") {
  const auto& fam = make_f().family;
  const ConvergenceReport r = convergence_report(fam, 12, 12, limit_set(fam));
  CHECK(r.per_n.size() == 1);
  CHECK(r.trend == 1.0);
}

TEST_CASE("window grows to enclose every root") {
  const auto& fam = make_steele_cycle().family;
  const LimitSet small = limit_set(fam, Window{-0.5, 0.5, -0.5, 0.5, 64});
  CHECK(small.curves.empty());
  const ConvergenceReport r = convergence_report(fam, 10, 12, small);
  CHECK_FALSE(r.limits.curves.empty());
  CHECK(r.limits.window.re_max > 1.0);
  for (const auto& d : r.per_n) CHECK(d.max_dist < 0.5);
}

TEST_CASE("trend below 0.7 for every built-in family") {
  for (const auto& spec : all_families()) {
    CAPTURE(spec.family.name());
    const ConvergenceReport r = convergence_report(spec.family, 10, 40, limit_set(spec.family));
    CHECK(r.trend < 0.7);
  }
}

TEST_CASE("converse residual") {
  const auto& steele = make_steele_cycle().family;
  const auto sets = family_roots(steele, 40, 40);
  for (const cplx z : sets.front().roots) CHECK(converse_residual(steele, z, 40) < 0.05);
  CHECK(converse_residual(steele, 1.5, 40) > 0.2);

  const ComplexPoly x = ComplexPoly::identity();
  const ExpSumFamily mirror("mirror", {{NCoeffPoly{ComplexPoly{1.0}}, x}, {NCoeffPoly{ComplexPoly{1.0}}, -x}});
  CHECK(converse_residual(mirror, cplx(0.3, 0.7), 1) == 0.0);

  CHECK_THROWS_AS(converse_residual(make_domination().family, 0.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(converse_residual(make_screl().family, 0.5, 1), std::domain_error);  // N = 0
}

TEST_CASE("converse residual vanishes at the roots of two-term families") {
  for (const auto& spec : all_families()) {
    if (spec.family.size() != 2) continue;
    CAPTURE(spec.family.name());
    const auto roots = family_roots(spec.family, 40, 40).front().roots;
    int unresolved = 0;
    for (const cplx z : roots) {
      if (const auto r = resolved_converse_residual(spec.family, z, 40))
        CHECK(*r < 0.05);
      else
        ++unresolved;
    }
    // Only g's two roots near its isolated point 0 fall below rounding level.
    CHECK(unresolved == (spec.family.name() == "g" ? 2 : 0));
  }
}
