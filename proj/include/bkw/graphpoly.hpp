#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bkw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Undirected multigraph; parallel edges and loops are allowed.
struct Multigraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  /// Throws std::invalid_argument for negative vertex counts or out-of-range endpoints.
  void validate() const;
  bool connected() const;
  int edge_count() const { return static_cast<int>(edges.size()); }

  static Multigraph cycle(int n);
  static Multigraph path(int edges);
  static Multigraph complete(int n);
};

/// Sparse sum of c_ab x^a y^b with no zero entries stored.
class BivarIntPoly {
 public:
  using Key = std::pair<int, int>;

  BivarIntPoly() = default;
  static BivarIntPoly monomial(int a, int b, BigInt c = 1);

  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int a, int b) const;
  void add_term(int a, int b, const BigInt& c);

  BivarIntPoly& operator+=(const BivarIntPoly& other);
  /// Multiply by x^a y^b.
  BivarIntPoly shifted(int a, int b) const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  friend bool operator==(const BivarIntPoly&, const BivarIntPoly&) = default;

 private:
  std::map<Key, BigInt> terms_;
};

std::string to_string(const BivarIntPoly& p);

inline constexpr int kTutteEdgeCap = 16;
inline constexpr int kTutteOracleEdgeCap = 12;

/// Tutte polynomial by memoized deletion-contraction. Requires a connected
/// graph with at most kTutteEdgeCap edges (std::invalid_argument otherwise).
BivarIntPoly tutte(const Multigraph& g);

/// Rank-nullity expansion over all edge subsets; at most kTutteOracleEdgeCap edges.
BivarIntPoly tutte_oracle(const Multigraph& g);

BivarIntPoly tutte_partial_x(const BivarIntPoly& t);

/// Exact rational coefficients, ascending degree, trailing zeros trimmed.
struct RationalUniPoly {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational operator()(const Rational& t) const;
  friend bool operator==(const RationalUniPoly&, const RationalUniPoly&) = default;
};

std::string to_string(const RationalUniPoly& p, const std::string& var = "t");

/// The unique polynomial of degree < points.size() through (xs[k], ys[k]), by
/// Newton divided differences in exact arithmetic.
RationalUniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// S(G; t) = (1-t)/t * T_x(G; 1/t, 1/(1-t)) / T(G; 1/t, 1/(1-t)), recovered by
/// exact sampling at m+1 rational points of (0, 1) and interpolation, then
/// checked at two held-out points. m = |E| >= 1 and G connected.
RationalUniPoly steele(const Multigraph& g);

/// Integral of steele(g) over [0, 1].
Rational mean_mst_length(const Multigraph& g);

}  // namespace bkw
