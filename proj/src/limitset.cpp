#include "bkw/limitset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "bkw/parallel.hpp"
#include "bkw/rootfind.hpp"

namespace bkw {

namespace {

constexpr double kDominanceMargin = 1e-9;
constexpr double kVanishingModulus = 1e-9;
constexpr double kProbeRadius = 1e-3;
constexpr int kProbeCount = 8;

std::vector<double> moduli(const ExpSumFamily& family, cplx z) {
  std::vector<double> m;
  m.reserve(family.size());
  for (const auto& t : family.terms()) m.push_back(std::abs(t.lambda(z)));
  return m;
}

bool leading_vanishes(const ExpTerm& term, cplx z) {
  const ComplexPoly& lead = term.alpha.leading();
  return std::abs(lead(z)) <= 1e-9 * std::max(lead.abs_eval(std::abs(z)), 1e-300);
}

// Greedy clustering of nearby points; representatives are cluster means.
std::vector<cplx> cluster(const std::vector<cplx>& pts, double radius, std::vector<int>* sizes = nullptr) {
  std::vector<cplx> sums;
  std::vector<int> counts;
  for (const cplx p : pts) {
    bool merged = false;
    for (std::size_t k = 0; k < sums.size(); ++k) {
      if (std::abs(sums[k] / static_cast<double>(counts[k]) - p) <= radius) {
        sums[k] += p;
        ++counts[k];
        merged = true;
        break;
      }
    }
    if (!merged) {
      sums.push_back(p);
      counts.push_back(1);
    }
  }
  for (std::size_t k = 0; k < sums.size(); ++k) sums[k] /= static_cast<double>(counts[k]);
  if (sizes) *sizes = counts;
  return sums;
}

// A root of multiplicity m is a simple root of the (m-1)-th derivative, where
// Newton converges to full precision instead of stalling at eps^(1/m).
cplx refine_multiple_root(const ComplexPoly& p, cplx z, int multiplicity) {
  ComplexPoly d = p;
  for (int k = 1; k < multiplicity; ++k) d = poly_derivative(d);
  const ComplexPoly dd = poly_derivative(d);
  for (int it = 0; it < 8; ++it) {
    const cplx slope = dd(z);
    if (slope == cplx{}) break;
    const cplx step = d(z) / slope;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag()) || std::abs(step) > 1e-4) break;
    z -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

bool strictly_dominates(const ExpSumFamily& family, int term, cplx z) {
  const Dominance d = dominant_index(family, z, kDominanceMargin);
  return d.index && *d.index == term;
}

// True when a strictly dominant term has a vanishing leading coefficient at z,
// or a positive-modulus tie contains a term whose leading coefficient does not vanish.
bool classified_by_dominance(const ExpSumFamily& family, cplx z, double tie_tol) {
  const auto m = moduli(family, z);
  if (*std::max_element(m.begin(), m.end()) < kVanishingModulus) return false;
  const Dominance d = dominant_index(family, z, tie_tol);
  if (d.index) return leading_vanishes(family[static_cast<std::size_t>(*d.index)], z);
  return std::any_of(d.tied.begin(), d.tied.end(),
                     [&](int k) { return !leading_vanishes(family[static_cast<std::size_t>(k)], z); });
}

}  // namespace

void Window::validate() const {
  if (!(re_min < re_max) || !(im_min < im_max)) throw std::invalid_argument("window: empty or inverted extent");
  if (grid < 16) throw std::invalid_argument("window: grid must be at least 16");
}

bool Window::contains(cplx z) const {
  return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
}

double Window::cell_diagonal() const { return std::hypot(cell_width(), cell_height()); }

cplx Window::node(int ix, int iy) const {
  return {re_min + (re_max - re_min) * ix / grid, im_min + (im_max - im_min) * iy / grid};
}

Dominance dominant_index(const ExpSumFamily& family, cplx z, double tie_tol) {
  const auto m = moduli(family, z);
  const double top = *std::max_element(m.begin(), m.end());
  Dominance d;
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k] * (1.0 + tie_tol) >= top) d.tied.push_back(static_cast<int>(k));
  if (d.tied.size() == 1) {
    d.index = d.tied.front();
    d.tied.clear();
  }
  return d;
}

std::vector<IsolatedPoint> isolated_limit_points(const ExpSumFamily& family, const Window& window) {
  std::vector<IsolatedPoint> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const ComplexPoly& lead = family[i].alpha.leading();
    if (lead.is_zero()) throw std::invalid_argument("isolated_limit_points: zero leading coefficient");
    if (lead.degree() < 1) continue;
    const RootSet rs = all_roots(lead);
    std::vector<int> sizes;
    const auto centres = cluster(rs.roots, 1e-6, &sizes);
    for (std::size_t c = 0; c < centres.size(); ++c) {
      const cplx z = sizes[c] > 1 ? refine_multiple_root(lead, centres[c], sizes[c]) : centres[c];
      if (!window.contains(z)) continue;
      const auto m = moduli(family, z);
      bool dominant;
      if (*std::max_element(m.begin(), m.end()) < kVanishingModulus) {
        dominant = true;
        for (int k = 0; k < kProbeCount && dominant; ++k) {
          const cplx probe = z + std::polar(kProbeRadius, 2.0 * std::numbers::pi * k / kProbeCount);
          dominant = strictly_dominates(family, static_cast<int>(i), probe);
        }
      } else {
        dominant = strictly_dominates(family, static_cast<int>(i), z);
      }
      if (dominant) out.push_back({z, static_cast<int>(i)});
    }
  }
  return out;
}

std::vector<cplx> persistent_zeros(const ExpSumFamily& family, const std::vector<long>& probe_indices) {
  std::vector<long> probes = probe_indices;
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  if (probes.size() < 2) throw std::invalid_argument("persistent_zeros: need at least two distinct probe indices");

  constexpr double kMatch = 1e-7;
  std::vector<std::vector<cplx>> root_lists;
  for (long n : probes) root_lists.push_back(family_roots(family, n, n).front().roots);

  std::vector<cplx> out;
  for (const cplx z : cluster(root_lists.front(), kMatch)) {
    const bool common = std::all_of(root_lists.begin() + 1, root_lists.end(), [&](const std::vector<cplx>& roots) {
      return std::any_of(roots.begin(), roots.end(), [&](cplx r) { return std::abs(r - z) <= kMatch; });
    });
    if (common && !classified_by_dominance(family, z, 1e-6)) out.push_back(z);
  }
  return out;
}

std::vector<Curve> equimodular_curves(const ExpSumFamily& family, const Window& window) {
  window.validate();
  const int g = window.grid;
  const std::size_t side = static_cast<std::size_t>(g) + 1;
  const std::size_t terms = family.size();

  // |lambda_k| at every grid node, row-major in iy.
  std::vector<std::vector<double>> mod(terms, std::vector<double>(side * side));
  parallel_for(side, [&](std::size_t iy) {
    for (std::size_t ix = 0; ix < side; ++ix) {
      const cplx z = window.node(static_cast<int>(ix), static_cast<int>(iy));
      for (std::size_t k = 0; k < terms; ++k) mod[k][iy * side + ix] = std::abs(family[k].lambda(z));
    }
  });

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < terms; ++i)
    for (std::size_t j = i + 1; j < terms; ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

  std::vector<std::vector<Curve>> per_pair(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t pi) {
    const auto [ti, tj] = pairs[pi];
    const auto& mi = mod[static_cast<std::size_t>(ti)];
    const auto& mj = mod[static_cast<std::size_t>(tj)];
    auto gap = [&](cplx z) { return std::abs(family[static_cast<std::size_t>(ti)].lambda(z)) -
                                    std::abs(family[static_cast<std::size_t>(tj)].lambda(z)); };
    auto node_gap = [&](std::size_t ix, std::size_t iy) { return mi[iy * side + ix] - mj[iy * side + ix]; };
    auto negative = [](double v) { return v < 0.0; };

    const std::size_t horizontal = side * static_cast<std::size_t>(g);
    auto h_edge = [&](std::size_t ix, std::size_t iy) { return iy * static_cast<std::size_t>(g) + ix; };
    auto v_edge = [&](std::size_t ix, std::size_t iy) { return horizontal + ix * static_cast<std::size_t>(g) + iy; };

    // Refined, filtered crossing point per edge id.
    std::unordered_map<std::size_t, std::size_t> point_of_edge;
    std::vector<cplx> points;
    auto refine = [&](cplx a, cplx b) {
      const bool a_neg = negative(gap(a));
      for (int it = 0; it < 64; ++it) {
        const cplx mid = 0.5 * (a + b);
        if (mid == a || mid == b) break;
        if (negative(gap(mid)) == a_neg)
          a = mid;
        else
          b = mid;
      }
      return 0.5 * (a + b);
    };
    auto keep = [&](cplx z) {
      const auto m = moduli(family, z);
      const double common = std::max(m[static_cast<std::size_t>(ti)], m[static_cast<std::size_t>(tj)]);
      if (!(common > 1e-12)) return false;
      for (std::size_t k = 0; k < terms; ++k) {
        if (static_cast<int>(k) == ti || static_cast<int>(k) == tj) continue;
        if (m[k] > common * (1.0 + kDominanceMargin)) return false;
      }
      return !(leading_vanishes(family[static_cast<std::size_t>(ti)], z) &&
               leading_vanishes(family[static_cast<std::size_t>(tj)], z));
    };
    auto visit_edge = [&](std::size_t id, std::size_t ax, std::size_t ay, std::size_t bx, std::size_t by) {
      if (negative(node_gap(ax, ay)) == negative(node_gap(bx, by))) return;
      const cplx z = refine(window.node(static_cast<int>(ax), static_cast<int>(ay)),
                            window.node(static_cast<int>(bx), static_cast<int>(by)));
      if (!keep(z)) return;
      point_of_edge.emplace(id, points.size());
      points.push_back(z);
    };
    for (std::size_t iy = 0; iy < side; ++iy)
      for (std::size_t ix = 0; ix + 1 < side; ++ix) visit_edge(h_edge(ix, iy), ix, iy, ix + 1, iy);
    for (std::size_t ix = 0; ix < side; ++ix)
      for (std::size_t iy = 0; iy + 1 < side; ++iy) visit_edge(v_edge(ix, iy), ix, iy, ix, iy + 1);

    // Link crossings that share a cell; saddles are resolved by the cell-centre sign.
    std::vector<std::vector<std::size_t>> adj(points.size());
    auto link = [&](std::size_t e0, std::size_t e1) {
      const auto p0 = point_of_edge.find(e0);
      const auto p1 = point_of_edge.find(e1);
      if (p0 == point_of_edge.end() || p1 == point_of_edge.end()) return;
      adj[p0->second].push_back(p1->second);
      adj[p1->second].push_back(p0->second);
    };
    for (std::size_t iy = 0; iy + 1 < side; ++iy) {
      for (std::size_t ix = 0; ix + 1 < side; ++ix) {
        const bool bl = negative(node_gap(ix, iy));
        const bool br = negative(node_gap(ix + 1, iy));
        const bool tr = negative(node_gap(ix + 1, iy + 1));
        const bool tl = negative(node_gap(ix, iy + 1));
        const std::size_t bottom = h_edge(ix, iy), top = h_edge(ix, iy + 1);
        const std::size_t left = v_edge(ix, iy), right = v_edge(ix + 1, iy);
        std::vector<std::size_t> crossing;
        if (bl != br) crossing.push_back(bottom);
        if (br != tr) crossing.push_back(right);
        if (tr != tl) crossing.push_back(top);
        if (tl != bl) crossing.push_back(left);
        if (crossing.size() == 2) {
          link(crossing[0], crossing[1]);
        } else if (crossing.size() == 4) {
          const cplx centre = 0.5 * (window.node(static_cast<int>(ix), static_cast<int>(iy)) +
                                     window.node(static_cast<int>(ix + 1), static_cast<int>(iy + 1)));
          if (negative(gap(centre)) == bl) {
            link(bottom, right);
            link(top, left);
          } else {
            link(bottom, left);
            link(top, right);
          }
        }
      }
    }

    std::vector<char> seen(points.size(), 0);
    auto walk = [&](std::size_t start) {
      Curve c{pairs[pi], {}};
      std::size_t prev = points.size();
      std::size_t cur = start;
      while (true) {
        seen[cur] = 1;
        c.points.push_back(points[cur]);
        std::size_t next = points.size();
        for (std::size_t nb : adj[cur])
          if (nb != prev && !seen[nb]) {
            next = nb;
            break;
          }
        if (next == points.size()) {
          const bool closes = c.points.size() > 2 && std::find(adj[cur].begin(), adj[cur].end(), start) != adj[cur].end();
          if (closes) c.points.push_back(points[start]);
          break;
        }
        prev = cur;
        cur = next;
      }
      per_pair[pi].push_back(std::move(c));
    };
    for (std::size_t k = 0; k < points.size(); ++k)
      if (!seen[k] && adj[k].size() != 2) walk(k);
    for (std::size_t k = 0; k < points.size(); ++k)
      if (!seen[k]) walk(k);
  });

  std::vector<Curve> out;
  for (auto& v : per_pair)
    for (auto& c : v) out.push_back(std::move(c));
  return out;
}

LimitSet limit_set(const ExpSumFamily& family, const Window& window) {
  window.validate();
  const NondegeneracyReport nd = nondegeneracy_check(family, 32, window);
  if (!nd.pass) throw std::invalid_argument("limit_set: family '" + family.name() + "' is degenerate");
  LimitSet out;
  out.window = window;
  out.isolated = isolated_limit_points(family, window);
  out.persistent = persistent_zeros(family);
  out.curves = equimodular_curves(family, window);
  return out;
}

NondegeneracyReport nondegeneracy_check(const ExpSumFamily& family, int sample_count, const Window& window,
                                        unsigned seed) {
  if (sample_count < 8) throw std::invalid_argument("nondegeneracy_check: sample_count must be at least 8");
  NondegeneracyReport report;
  report.minimality = minimality_check(family);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(window.re_min, window.re_max);
  std::uniform_real_distribution<double> im(window.im_min, window.im_max);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      std::vector<double> ratios;
      for (int attempts = 0; static_cast<int>(ratios.size()) < sample_count && attempts < 100 * sample_count; ++attempts) {
        const cplx z(re(rng), im(rng));
        const double denom = std::abs(family[j].lambda(z));
        if (denom < 1e-12) continue;
        ratios.push_back(std::abs(family[i].lambda(z)) / denom);
      }
      if (ratios.size() < 2) throw std::runtime_error("nondegeneracy_check: could not sample away from zeros");
      double mean = 0.0;
      for (double r : ratios) mean += r;
      mean /= static_cast<double>(ratios.size());
      double var = 0.0;
      for (double r : ratios) var += (r - mean) * (r - mean);
      const double sd = std::sqrt(var / static_cast<double>(ratios.size() - 1));
      if (sd < 1e-9 * mean) report.constant_ratio_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  report.pass = report.constant_ratio_pairs.empty() && report.minimality.pass;
  return report;
}

}  // namespace bkw
