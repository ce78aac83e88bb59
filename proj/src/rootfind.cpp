#include "bkw/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "bkw/parallel.hpp"

namespace bkw {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

bool root_less(cplx a, cplx b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); }

// Start points on the circles given by the upper convex hull of
// (j, log|a_j|); each hull edge from j0 to j1 contributes j1 - j0 points on
// the circle of radius (|a_j0| / |a_j1|)^(1 / (j1 - j0)).
std::vector<cplx> newton_polygon_starts(const std::vector<cplx>& a) {
  const int d = static_cast<int>(a.size()) - 1;
  std::vector<int> hull;
  std::vector<double> logmod(a.size());
  for (int j = 0; j <= d; ++j) {
    const double m = std::abs(a[static_cast<std::size_t>(j)]);
    logmod[static_cast<std::size_t>(j)] = m > 0 ? std::log(m) : -std::numeric_limits<double>::infinity();
  }
  for (int j = 0; j <= d; ++j) {
    if (!std::isfinite(logmod[static_cast<std::size_t>(j)])) continue;
    while (hull.size() >= 2) {
      const int i0 = hull[hull.size() - 2];
      const int i1 = hull.back();
      const double y0 = logmod[static_cast<std::size_t>(i0)];
      const double y1 = logmod[static_cast<std::size_t>(i1)];
      const double y2 = logmod[static_cast<std::size_t>(j)];
      // drop i1 unless it lies strictly above the chord i0 -> j
      if ((y1 - y0) * (j - i0) <= (y2 - y0) * (i1 - i0))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(j);
  }
  std::vector<cplx> starts;
  starts.reserve(static_cast<std::size_t>(d));
  constexpr double kSigma = 0.7;
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int j0 = hull[h];
    const int j1 = hull[h + 1];
    const int count = j1 - j0;
    const double r = std::exp((logmod[static_cast<std::size_t>(j0)] - logmod[static_cast<std::size_t>(j1)]) / count);
    for (int k = 0; k < count; ++k) {
      const double theta = two_pi * k / count + two_pi * static_cast<double>(h) / d + kSigma;
      starts.push_back(std::polar(r, theta));
    }
  }
  return starts;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

double RootSet::worst_residual() const {
  double w = 0.0;
  for (double r : residuals) w = std::max(w, r);
  return w;
}

Evaluator horner_evaluator(const ComplexPoly& p) {
  return [p, dp = poly_derivative(p)](cplx z) {
    return PolyEval{p(z), dp(z), p.abs_eval(std::abs(z))};
  };
}

Evaluator family_evaluator(const ExpSumFamily& family, long n) {
  const long big_n = family.effective_index(n);
  if (big_n < 0) throw std::domain_error("family_evaluator: negative effective index");
  struct Piece {
    ComplexPoly alpha, dalpha, lambda, dlambda;
  };
  std::vector<Piece> pieces;
  for (const auto& t : family.terms()) {
    ComplexPoly a = t.alpha.at(big_n);
    pieces.push_back({a, poly_derivative(a), t.lambda, poly_derivative(t.lambda)});
  }
  return [pieces = std::move(pieces), big_n](cplx z) {
    PolyEval out{cplx{}, cplx{}, 0.0};
    const double r = std::abs(z);
    const double nd = static_cast<double>(big_n);
    for (const auto& pc : pieces) {
      const cplx a = pc.alpha(z);
      const cplx da = pc.dalpha(z);
      const cplx l = pc.lambda(z);
      const cplx dl = pc.dlambda(z);
      const cplx l_pow_m1 = big_n >= 1 ? ipow(l, big_n - 1) : cplx{};
      const cplx l_pow = big_n >= 1 ? l_pow_m1 * l : cplx{1.0};
      out.value += a * l_pow;
      out.derivative += da * l_pow + a * nd * l_pow_m1 * dl;
      out.scale += pc.alpha.abs_eval(r) * std::abs(l_pow) +
                   std::abs(a) * nd * std::abs(l_pow_m1) * pc.lambda.abs_eval(r);
    }
    return out;
  };
}

RootSet all_roots(const ComplexPoly& p, double tol, int max_iterations) {
  return all_roots(p, horner_evaluator(p), tol, max_iterations);
}

RootSet all_roots(const ComplexPoly& p, const Evaluator& eval, double tol, int max_iterations) {
  if (p.is_zero()) throw std::invalid_argument("all_roots: zero polynomial");
  if (p.degree() < 1) throw std::invalid_argument("all_roots: constant polynomial has no roots");

  const auto& c = p.coeffs();
  std::size_t zeros_at_origin = 0;
  while (c[zeros_at_origin] == cplx{}) ++zeros_at_origin;
  const std::vector<cplx> reduced(c.begin() + static_cast<std::ptrdiff_t>(zeros_at_origin), c.end());
  const int d = static_cast<int>(reduced.size()) - 1;
  const double m = static_cast<double>(zeros_at_origin);
  const double stop_factor = 4.0 * (p.degree() + 1) * kUnitRoundoff;

  std::vector<cplx> z = d > 0 ? newton_polygon_starts(reduced) : std::vector<cplx>{};
  std::vector<char> done(z.size(), 0);

  // Newton correction for q(z) = P(z) / z^m via its logarithmic derivative.
  auto newton_ratio = [&](cplx zi, const PolyEval& e) -> cplx {
    const cplx log_deriv = e.derivative / e.value - (m > 0 ? m / zi : cplx{});
    return cplx{1.0} / log_deriv;
  };

  int remaining = d;
  for (int iter = 0; iter < max_iterations && remaining > 0; ++iter) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const PolyEval e = eval(z[i]);
      if (e.value == cplx{} || std::abs(e.value) <= stop_factor * e.scale) {
        done[i] = 1;
        --remaining;
        continue;
      }
      const cplx ratio = newton_ratio(z[i], e);
      if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) {
        z[i] *= cplx(1.0 + 1e-7, 1e-7);
        continue;
      }
      cplx repulsion{};
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) repulsion += cplx{1.0} / (z[i] - z[j]);
      const cplx step = ratio / (cplx{1.0} - ratio * repulsion);
      z[i] -= step;
      if (std::abs(step) <= 4.0 * kUnitRoundoff * std::abs(z[i])) {
        done[i] = 1;
        --remaining;
      }
    }
  }

  // One Newton polishing step per root, kept only if it lowers |P|.
  for (auto& zi : z) {
    const PolyEval e = eval(zi);
    if (e.value == cplx{}) continue;
    const cplx ratio = newton_ratio(zi, e);
    if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) continue;
    const cplx candidate = zi - ratio;
    if (std::abs(eval(candidate).value) < std::abs(e.value)) zi = candidate;
  }

  RootSet out;
  out.roots.assign(zeros_at_origin, cplx{});
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  std::sort(out.roots.begin(), out.roots.end(), root_less);
  // Outside the unit disk the coefficient scale alone understates what double
  // evaluation can resolve: near z = 2, x^30 alone is 1e9 times max|coeff|.
  const double norm = p.max_abs_coeff();
  const int deg = p.degree();
  out.residuals.reserve(out.roots.size());
  for (const cplx r : out.roots) {
    if (r == cplx{} && zeros_at_origin > 0) {
      out.residuals.push_back(0.0);
      continue;
    }
    const double growth = std::pow(std::max(1.0, std::abs(r)), deg);
    out.residuals.push_back(std::abs(eval(r).value) / (norm * growth));
  }

  const double worst = out.worst_residual();
  if (remaining > 0)
    throw RootFindingError("all_roots: no convergence after " + std::to_string(max_iterations) +
                               " iterations (worst residual " + sci(worst) + ")",
                           worst);
  if (!(worst < tol))
    throw RootFindingError("all_roots: residual " + sci(worst) + " exceeds tolerance", worst);
  return out;
}

std::vector<RootSet> family_roots(const ExpSumFamily& family, long n_from, long n_to, double tol) {
  if (n_from > n_to) throw std::invalid_argument("family_roots: empty index range");
  std::vector<RootSet> out(static_cast<std::size_t>(n_to - n_from + 1));
  parallel_for(out.size(), [&](std::size_t k) {
    const long n = n_from + static_cast<long>(k);
    try {
      RootSet rs = all_roots(expand_at_index(family, n), family_evaluator(family, n), tol);
      rs.n = n;
      out[k] = std::move(rs);
    } catch (const RootFindingError& e) {
      throw RootFindingError(family.name() + " n=" + std::to_string(n) + ": " + e.what(), e.worst_residual());
    }
  });
  return out;
}

int winding_count(const ComplexPoly& p, cplx center, double radius) {
  if (p.is_zero()) throw std::invalid_argument("winding_count: zero polynomial");
  if (!(radius > 0)) throw std::invalid_argument("winding_count: radius must be positive");
  const double floor = 1e-10 * p.max_abs_coeff();
  auto sample = [&](double theta) {
    const cplx v = p(center + std::polar(radius, theta));
    if (std::abs(v) < floor) throw std::domain_error("winding_count: root on contour");
    return v;
  };
  constexpr double kMaxStep = std::numbers::pi / 2;
  constexpr int kMaxDepth = 40;

  // Argument increment over [t0, t1], bisecting until each piece is below pi/2.
  auto increment = [&](auto&& self, double t0, cplx v0, double t1, cplx v1, int depth) -> double {
    const double delta = std::arg(v1 / v0);
    if (std::abs(delta) < kMaxStep) return delta;
    if (depth >= kMaxDepth) throw std::domain_error("winding_count: root on contour");
    const double tm = 0.5 * (t0 + t1);
    const cplx vm = sample(tm);
    return self(self, t0, v0, tm, vm, depth + 1) + self(self, tm, vm, t1, v1, depth + 1);
  };

  const int base = std::max(64, 8 * std::max(0, p.degree()));
  const double two_pi = 2.0 * std::numbers::pi;
  double total = 0.0;
  double t_prev = 0.0;
  cplx v_prev = sample(0.0);
  const cplx v_start = v_prev;
  for (int k = 1; k <= base; ++k) {
    const double t = two_pi * k / base;
    const cplx v = k == base ? v_start : sample(t);
    total += increment(increment, t_prev, v_prev, t, v, 0);
    t_prev = t;
    v_prev = v;
  }
  return static_cast<int>(std::lround(total / two_pi));
}

}  // namespace bkw
