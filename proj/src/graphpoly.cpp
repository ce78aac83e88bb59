#include "bkw/graphpoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bkw {

namespace {

struct UnionFind {
  std::vector<int> parent;
  int components;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), components(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    --components;
    return true;
  }
};

int component_count(int n, const std::vector<std::pair<int, int>>& edges, std::size_t skip = static_cast<std::size_t>(-1)) {
  UnionFind uf(n);
  for (std::size_t k = 0; k < edges.size(); ++k)
    if (k != skip) uf.unite(edges[k].first, edges[k].second);
  return uf.components;
}

// Relabels vertices in BFS order from the highest-degree vertex (neighbours
// visited by descending degree, then old index) and sorts the edge list.
// Equal keys imply isomorphic graphs, so the key is safe for memoization.
Multigraph relabel(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.n_vertices);
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : g.edges) {
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  auto before = [&](int a, int b) {
    return degree[static_cast<std::size_t>(a)] != degree[static_cast<std::size_t>(b)]
               ? degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)]
               : a < b;
  };
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), before);
  std::vector<int> label(n, -1);
  int next = 0;
  for (int root : order) {
    if (label[static_cast<std::size_t>(root)] >= 0) continue;
    std::queue<int> q;
    q.push(root);
    label[static_cast<std::size_t>(root)] = next++;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      auto nb = adj[static_cast<std::size_t>(v)];
      std::sort(nb.begin(), nb.end(), before);
      for (int w : nb) {
        if (label[static_cast<std::size_t>(w)] >= 0) continue;
        label[static_cast<std::size_t>(w)] = next++;
        q.push(w);
      }
    }
  }
  Multigraph out{g.n_vertices, {}};
  for (const auto& [u, v] : g.edges) {
    const int a = label[static_cast<std::size_t>(u)];
    const int b = label[static_cast<std::size_t>(v)];
    out.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

struct KeyHash {
  std::size_t operator()(const std::vector<int>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : k) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

class TutteSolver {
 public:
  BivarIntPoly solve(const Multigraph& g) {
    // Loops factor out as y each.
    Multigraph rest{g.n_vertices, {}};
    int loops = 0;
    for (const auto& e : g.edges) {
      if (e.first == e.second)
        ++loops;
      else
        rest.edges.push_back(e);
    }
    if (loops > 0) return solve(rest).shifted(0, loops);
    if (rest.edges.empty()) return BivarIntPoly::monomial(0, 0);
    // A tree contributes x^|E|.
    if (rest.edge_count() == rest.n_vertices - 1) return BivarIntPoly::monomial(rest.edge_count(), 0);

    const Multigraph canon = relabel(rest);
    std::vector<int> key{canon.n_vertices};
    for (const auto& [u, v] : canon.edges) {
      key.push_back(u);
      key.push_back(v);
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const bool bridge = component_count(canon.n_vertices, canon.edges, 0) > 1;
    BivarIntPoly result = bridge ? contract(canon, 0).shifted(1, 0) : contract(canon, 0);
    if (!bridge) {
      Multigraph deleted = canon;
      deleted.edges.erase(deleted.edges.begin());
      result += solve(deleted);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  BivarIntPoly contract(const Multigraph& g, std::size_t edge) {
    const auto [keep, drop] = g.edges[edge];
    Multigraph out{g.n_vertices - 1, {}};
    auto map = [&, keep = keep, drop = drop](int w) {
      if (w == drop) w = keep;
      return w > drop ? w - 1 : w;
    };
    for (std::size_t k = 0; k < g.edges.size(); ++k)
      if (k != edge) out.edges.emplace_back(map(g.edges[k].first), map(g.edges[k].second));
    return solve(out);
  }

  std::unordered_map<std::vector<int>, BivarIntPoly, KeyHash> memo_;
};

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void Multigraph::validate() const {
  if (n_vertices < 0) throw std::invalid_argument("graph: negative vertex count");
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
      throw std::invalid_argument("graph: edge endpoint out of range");
}

bool Multigraph::connected() const { return n_vertices <= 1 || component_count(n_vertices, edges) == 1; }

Multigraph Multigraph::cycle(int n) {
  Multigraph g{n, {}};
  for (int k = 0; k < n; ++k) g.edges.emplace_back(k, (k + 1) % n);
  return g;
}

Multigraph Multigraph::path(int edges) {
  Multigraph g{edges + 1, {}};
  for (int k = 0; k < edges; ++k) g.edges.emplace_back(k, k + 1);
  return g;
}

Multigraph Multigraph::complete(int n) {
  Multigraph g{n, {}};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
  return g;
}

// ---------------------------------------------------------------------------

BivarIntPoly BivarIntPoly::monomial(int a, int b, BigInt c) {
  BivarIntPoly p;
  p.add_term(a, b, c);
  return p;
}

BigInt BivarIntPoly::coeff(int a, int b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivarIntPoly::add_term(int a, int b, const BigInt& c) {
  if (c == 0) return;
  auto& slot = terms_[{a, b}];
  slot += c;
  if (slot == 0) terms_.erase({a, b});
}

BivarIntPoly& BivarIntPoly::operator+=(const BivarIntPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivarIntPoly BivarIntPoly::shifted(int a, int b) const {
  BivarIntPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.first + a, k.second + b}, c);
  return out;
}

Rational BivarIntPoly::evaluate(const Rational& x, const Rational& y) const {
  int max_a = 0, max_b = 0;
  for (const auto& [k, c] : terms_) {
    max_a = std::max(max_a, k.first);
    max_b = std::max(max_b, k.second);
  }
  auto powers = [](const Rational& v, int top) {
    std::vector<Rational> p(static_cast<std::size_t>(top) + 1, Rational(1));
    for (int j = 1; j <= top; ++j) p[j] = p[j - 1] * v;
    return p;
  };
  const auto xp = powers(x, max_a), yp = powers(y, max_b);
  Rational sum = 0;
  for (const auto& [k, c] : terms_) sum += Rational(c) * xp[k.first] * yp[k.second];
  return sum;
}

std::string to_string(const BivarIntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto [a, b] = it->first;
    if (!first) os << " + ";
    first = false;
    const bool unit = it->second == 1 && (a > 0 || b > 0);
    if (!unit) os << it->second;
    if (a > 0) os << (unit ? "" : "*") << "x" << (a > 1 ? "^" + std::to_string(a) : "");
    if (b > 0) os << ((unit && a == 0) ? "" : "*") << "y" << (b > 1 ? "^" + std::to_string(b) : "");
  }
  return os.str();
}

BivarIntPoly tutte(const Multigraph& g) {
  g.validate();
  if (g.edge_count() > kTutteEdgeCap)
    throw std::invalid_argument("tutte: " + std::to_string(g.edge_count()) + " edges exceeds the cap of " +
                                std::to_string(kTutteEdgeCap));
  if (!g.connected()) throw std::invalid_argument("tutte: graph is disconnected");
  TutteSolver solver;
  return solver.solve(g);
}

BivarIntPoly tutte_oracle(const Multigraph& g) {
  g.validate();
  const int m = g.edge_count();
  if (m > kTutteOracleEdgeCap)
    throw std::invalid_argument("tutte_oracle: " + std::to_string(m) + " edges exceeds the cap of " +
                                std::to_string(kTutteOracleEdgeCap));
  const int rank_e = g.n_vertices - component_count(g.n_vertices, g.edges);
  // tally[i][j] = number of subsets A with r(E) - r(A) = i and |A| - r(A) = j
  std::vector<std::vector<BigInt>> tally(static_cast<std::size_t>(rank_e) + 1,
                                         std::vector<BigInt>(static_cast<std::size_t>(m) + 1, 0));
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    UnionFind uf(g.n_vertices);
    int size = 0;
    for (int k = 0; k < m; ++k) {
      if (!(mask & (1u << k))) continue;
      ++size;
      uf.unite(g.edges[static_cast<std::size_t>(k)].first, g.edges[static_cast<std::size_t>(k)].second);
    }
    const int rank_a = g.n_vertices - uf.components;
    ++tally[static_cast<std::size_t>(rank_e - rank_a)][static_cast<std::size_t>(size - rank_a)];
  }
  BivarIntPoly out;
  for (int i = 0; i <= rank_e; ++i) {
    for (int j = 0; j <= m; ++j) {
      const BigInt& count = tally[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (count == 0) continue;
      // (x-1)^i (y-1)^j
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) {
          BigInt c = count * binomial(i, a) * binomial(j, b);
          if ((i - a + j - b) % 2) c = -c;
          out.add_term(a, b, c);
        }
    }
  }
  return out;
}

BivarIntPoly tutte_partial_x(const BivarIntPoly& t) {
  BivarIntPoly out;
  for (const auto& [k, c] : t.terms())
    if (k.first > 0) out.add_term(k.first - 1, k.second, c * k.first);
  return out;
}

// ---------------------------------------------------------------------------

Rational RationalUniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string to_string(const RationalUniPoly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int j = p.degree(); j >= 0; --j) {
    const Rational& c = p.coeffs[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    if (a != 1 || j == 0) os << a << (j > 0 ? "*" : "");
    if (j >= 1) os << var;
    if (j >= 2) os << "^" << j;
  }
  return first ? "0" : os.str();
}

RationalUniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolate: mismatched or empty samples");
  const std::size_t k = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) {
      if (xs[i] == xs[i - level]) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  // Horner on the Newton form: p = dd[k-1]; p = p * (t - xs[i]) + dd[i].
  std::vector<Rational> poly{dd[k - 1]};
  for (std::size_t i = k - 1; i-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  return {std::move(poly)};
}

RationalUniPoly steele(const Multigraph& g) {
  const int m = g.edge_count();
  if (m < 1) throw std::invalid_argument("steele: graph has no edges");
  const BivarIntPoly t_poly = tutte(g);
  const BivarIntPoly tx_poly = tutte_partial_x(t_poly);

  // Candidate points k/D in (0, 1) for D = m+3, m+4, ..., skipping repeats and
  // points where the denominator T(1/t, 1/(1-t)) vanishes.
  std::vector<Rational> xs, ys;
  const std::size_t needed = static_cast<std::size_t>(m) + 3;
  constexpr int kMaxExtraDenominators = 64;
  for (int den = m + 3; den <= m + 3 + kMaxExtraDenominators && xs.size() < needed; ++den) {
    for (int k = 1; k < den && xs.size() < needed; ++k) {
      const Rational t(k, den);
      if (std::find(xs.begin(), xs.end(), t) != xs.end()) continue;
      const Rational x = 1 / t;
      const Rational y = 1 / (1 - t);
      const Rational denom = t_poly.evaluate(x, y);
      if (denom == 0) continue;
      xs.push_back(t);
      ys.push_back((1 - t) / t * tx_poly.evaluate(x, y) / denom);
    }
  }
  if (xs.size() < needed) throw std::runtime_error("steele: could not find sample points with nonzero denominator");

  const std::vector<Rational> fit_x(xs.begin(), xs.begin() + m + 1);
  const std::vector<Rational> fit_y(ys.begin(), ys.begin() + m + 1);
  RationalUniPoly s = interpolate(fit_x, fit_y);
  for (std::size_t k = static_cast<std::size_t>(m) + 1; k < needed; ++k)
    if (s(xs[k]) != ys[k]) throw std::runtime_error("steele: held-out sample disagrees; degree bound violated");
  return s;
}

Rational mean_mst_length(const Multigraph& g) {
  const RationalUniPoly s = steele(g);
  Rational sum = 0;
  for (std::size_t j = 0; j < s.coeffs.size(); ++j) sum += s.coeffs[j] / Rational(static_cast<long>(j) + 1);
  return sum;
}

}  // namespace bkw
