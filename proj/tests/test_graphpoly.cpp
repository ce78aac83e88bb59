#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

#include "bkw/graphpoly.hpp"

using namespace bkw;

namespace {

// Kirchhoff: spanning trees = any cofactor of the Laplacian. Loops do not count.
BigInt spanning_tree_count(const Multigraph& g) {
  const int n = g.n_vertices;
  if (n <= 1) return 1;
  std::vector<std::vector<Rational>> lap(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (const auto& [u, v] : g.edges) {
    if (u == v) continue;
    lap[u][u] += 1;
    lap[v][v] += 1;
    lap[u][v] -= 1;
    lap[v][u] -= 1;
  }
  const int k = n - 1;  // drop the last row and column
  Rational det = 1;
  for (int c = 0; c < k; ++c) {
    int pivot = c;
    while (pivot < k && lap[pivot][c] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != c) {
      std::swap(lap[pivot], lap[c]);
      det = -det;
    }
    det *= lap[c][c];
    for (int r = c + 1; r < k; ++r) {
      const Rational factor = lap[r][c] / lap[c][c];
      for (int j = c; j < k; ++j) lap[r][j] -= factor * lap[c][j];
    }
  }
  return boost::multiprecision::numerator(det);
}

// Acyclic edge subsets, counted directly.
BigInt forest_count(const Multigraph& g) {
  const int m = g.edge_count();
  BigInt count = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> parent(static_cast<std::size_t>(g.n_vertices));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!(mask >> e & 1u)) continue;
      const int a = find(g.edges[e].first), b = find(g.edges[e].second);
      if (a == b) acyclic = false;
      else parent[a] = b;
    }
    if (acyclic) ++count;
  }
  return count;
}

Multigraph random_connected(std::mt19937_64& rng, int n, int extra) {
  Multigraph g;
  g.n_vertices = n;
  for (int v = 1; v < n; ++v) g.edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < extra; ++k) g.edges.emplace_back(pick(rng), pick(rng));  // may add loops and parallels
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

Multigraph theta() {
  // two vertices joined by three internally disjoint paths of lengths 1, 2, 3
  return {5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}}};
}

}  // namespace

TEST_CASE("graph construction and validation") {
  CHECK(Multigraph::cycle(4).edge_count() == 4);
  CHECK(Multigraph::path(3).n_vertices == 4);
  CHECK(Multigraph::complete(4).edge_count() == 6);
  CHECK(Multigraph::cycle(5).connected());
  CHECK_FALSE((Multigraph{4, {{0, 1}, {2, 3}}}).connected());
  CHECK_THROWS_AS((Multigraph{2, {{0, 2}}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((Multigraph{-1, {}}).validate(), std::invalid_argument);
}

TEST_CASE("bivariate polynomial basics") {
  BivarIntPoly p = BivarIntPoly::monomial(1, 0);
  p += BivarIntPoly::monomial(0, 1, 2);
  CHECK(p.coeff(1, 0) == 1);
  CHECK(p.coeff(0, 1) == 2);
  p.add_term(1, 0, -1);
  CHECK(p.terms().size() == 1);
  CHECK(p.shifted(2, 1).coeff(2, 2) == 2);
  CHECK(p.evaluate(Rational(3), Rational(1, 2)) == 1);
  CHECK(tutte_partial_x(BivarIntPoly::monomial(3, 1, 5)) == BivarIntPoly::monomial(2, 1, 15));
}

TEST_CASE("known Tutte polynomials") {
  const BivarIntPoly x = BivarIntPoly::monomial(1, 0), y = BivarIntPoly::monomial(0, 1);
  CHECK(tutte(Multigraph::path(4)) == BivarIntPoly::monomial(4, 0));
  CHECK(tutte(Multigraph{1, {{0, 0}}}) == y);
  BivarIntPoly xy = x;
  xy += y;
  CHECK(tutte(Multigraph{2, {{0, 1}, {0, 1}}}) == xy);

  // C_n: x^{n-1} + ... + x + y
  BivarIntPoly c5 = y;
  for (int k = 1; k <= 4; ++k) c5 += BivarIntPoly::monomial(k, 0);
  CHECK(tutte(Multigraph::cycle(5)) == c5);

  // K_4: x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
  BivarIntPoly k4;
  for (const auto& [a, b, c] : std::vector<std::tuple<int, int, int>>{
           {3, 0, 1}, {2, 0, 3}, {1, 0, 2}, {1, 1, 4}, {0, 1, 2}, {0, 2, 3}, {0, 3, 1}})
    k4.add_term(a, b, c);
  CHECK(tutte(Multigraph::complete(4)) == k4);
  CHECK(to_string(tutte(Multigraph::cycle(3))) == "x^2 + x + y");
}

TEST_CASE("Tutte polynomial preconditions") {
  CHECK_THROWS_AS(tutte(Multigraph{3, {{0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(tutte(Multigraph::cycle(kTutteEdgeCap + 1)), std::invalid_argument);
  CHECK_THROWS_AS(tutte_oracle(Multigraph::cycle(kTutteOracleEdgeCap + 1)), std::invalid_argument);
}

TEST_CASE("deletion-contraction matches the subset expansion") {
  std::vector<Multigraph> corpus = {Multigraph::cycle(3), Multigraph::cycle(4), Multigraph::cycle(5),
                                    Multigraph::cycle(6), Multigraph::complete(4), theta(),
                                    Multigraph{3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}}}};
  for (int m = 1; m <= 6; ++m) corpus.push_back(Multigraph::path(m));
  std::mt19937_64 rng(17);
  for (int k = 0; k < 25; ++k) corpus.push_back(random_connected(rng, 2 + k % 5, k % 7));
  for (const auto& g : corpus) {
    CAPTURE(g.edge_count());
    CHECK(tutte(g) == tutte_oracle(g));
  }
}

TEST_CASE("Tutte evaluations count trees, forests and subsets") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 20; ++k) {
    const Multigraph g = random_connected(rng, 2 + k % 6, k % 6);
    CAPTURE(k);
    const BivarIntPoly t = tutte(g);
    CHECK(t.evaluate(1, 1) == Rational(spanning_tree_count(g)));
    CHECK(t.evaluate(2, 1) == Rational(forest_count(g)));
    CHECK(t.evaluate(2, 2) == Rational(BigInt(1) << g.edge_count()));
  }
  // 16 edges: K_4 plus a 10-edge tail stays within the cap
  Multigraph big = Multigraph::complete(4);
  big.n_vertices = 14;
  for (int v = 3; v < 13; ++v) big.edges.emplace_back(v, v + 1);
  REQUIRE(big.edge_count() == kTutteEdgeCap);
  CHECK(tutte(big).evaluate(1, 1) == Rational(spanning_tree_count(big)));
}

TEST_CASE("exact interpolation") {
  const std::vector<Rational> xs{0, 1, 2, Rational(1, 2)};
  std::vector<Rational> ys;
  for (const auto& x : xs) ys.push_back(3 * x * x * x - x + Rational(2, 7));
  const RationalUniPoly p = interpolate(xs, ys);
  CHECK(p.coeffs == std::vector<Rational>{Rational(2, 7), -1, 0, 3});
  CHECK_THROWS_AS(interpolate({1, 1}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(interpolate({}, {}), std::invalid_argument);
  CHECK(interpolate({1, 2, 3}, {5, 5, 5}).coeffs == std::vector<Rational>{5});
}

TEST_CASE("Steele polynomials of cycles") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    std::vector<Rational> want(static_cast<std::size_t>(n) + 1, 0);
    want[0] = n - 1;
    want[1] = -n;
    want[static_cast<std::size_t>(n)] = 1;
    CHECK(steele(Multigraph::cycle(n)).coeffs == want);
  }
  CHECK(to_string(steele(Multigraph::cycle(4))) == "t^4 - 4*t + 3");
  CHECK_THROWS_AS(steele(Multigraph{1, {}}), std::invalid_argument);
}

TEST_CASE("mean MST length") {
  CHECK(mean_mst_length(Multigraph::path(1)) == Rational(1, 2));
  for (int m = 1; m <= 5; ++m) CHECK(mean_mst_length(Multigraph::path(m)) == Rational(m, 2));
  // a star is a tree too
  CHECK(mean_mst_length(Multigraph{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}}) == 2);
  CHECK(mean_mst_length(Multigraph::cycle(3)) == Rational(3, 4));
  CHECK(mean_mst_length(Multigraph::cycle(4)) == Rational(6, 5));
  // two parallel edges: E[min(U, V)] = 1/3
  CHECK(mean_mst_length(Multigraph{2, {{0, 1}, {0, 1}}}) == Rational(1, 3));
  // a loop never joins the tree
  CHECK(mean_mst_length(Multigraph{2, {{0, 1}, {1, 1}}}) == Rational(1, 2));
}
