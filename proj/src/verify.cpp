#include "bkw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bkw {

namespace {

double segment_distance(cplx p, cplx a, cplx b) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

double distance_to_limit_set(const LimitSet& limits, cplx z) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& ip : limits.isolated) best = std::min(best, std::abs(z - ip.point));
  for (const cplx p : limits.persistent) best = std::min(best, std::abs(z - p));
  for (const auto& curve : limits.curves) {
    const auto& pts = curve.points;
    if (pts.size() == 1) best = std::min(best, std::abs(z - pts.front()));
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) best = std::min(best, segment_distance(z, pts[k], pts[k + 1]));
  }
  return best;
}

double ConvergenceReport::max_coverage_distance() const {
  double w = 0.0;
  for (const auto& c : coverage) w = std::max(w, c.distance);
  return w;
}

ConvergenceReport convergence_report(const ExpSumFamily& family, long n_from, long n_to, const LimitSet& limits,
                                     double tol) {
  const auto root_sets = family_roots(family, n_from, n_to, tol);

  ConvergenceReport report;
  report.limits = limits;
  Window w = limits.window;
  bool grow = false;
  for (const auto& rs : root_sets) {
    for (const cplx r : rs.roots) {
      if (limits.window.contains(r)) continue;
      grow = true;
      w.re_min = std::min(w.re_min, r.real());
      w.re_max = std::max(w.re_max, r.real());
      w.im_min = std::min(w.im_min, r.imag());
      w.im_max = std::max(w.im_max, r.imag());
    }
  }
  if (grow) {
    const double pad_re = 0.1 * (w.re_max - w.re_min);
    const double pad_im = 0.1 * (w.im_max - w.im_min);
    w.re_min -= pad_re;
    w.re_max += pad_re;
    w.im_min -= pad_im;
    w.im_max += pad_im;
    report.limits = limit_set(family, w);
  }

  for (const auto& rs : root_sets) {
    IndexDistance d{rs.n, 0.0, 0.0};
    for (const cplx r : rs.roots) {
      const double dist = distance_to_limit_set(report.limits, r);
      d.max_dist = std::max(d.max_dist, dist);
      d.mean_dist += dist;
    }
    if (!rs.roots.empty()) d.mean_dist /= static_cast<double>(rs.roots.size());
    report.per_n.push_back(d);
  }

  const auto& last = root_sets.back().roots;
  for (const auto& curve : report.limits.curves) {
    for (const cplx p : curve.points) {
      double best = std::numeric_limits<double>::infinity();
      for (const cplx r : last) best = std::min(best, std::abs(p - r));
      report.coverage.push_back({p, best});
    }
  }

  const double first = report.per_n.front().max_dist;
  const double final = report.per_n.back().max_dist;
  if (report.per_n.size() == 1 || first == final)
    report.trend = 1.0;
  else
    report.trend = first > 0 ? final / first : std::numeric_limits<double>::infinity();
  return report;
}

double converse_residual(const ExpSumFamily& family, cplx z, long n) {
  if (family.size() != 2) throw std::invalid_argument("converse_residual: defined for two-term families only");
  const long big_n = family.effective_index(n);
  if (big_n < 1) throw std::domain_error("converse_residual: effective index must be at least 1");
  const double inv = 1.0 / static_cast<double>(big_n);
  auto side = [&](const ExpTerm& t) { return std::pow(std::abs(t.alpha(big_n, z)), inv) * std::abs(t.lambda(z)); };
  return std::abs(side(family[0]) - side(family[1]));
}

std::optional<double> resolved_converse_residual(const ExpSumFamily& family, cplx z, long n) {
  const double value = converse_residual(family, z, n);
  const long big_n = family.effective_index(n);
  const double r = std::abs(z);
  for (const auto& t : family.terms()) {
    double scale = 0.0, npow = 1.0;
    for (const auto& p : t.alpha.n_coeffs()) {
      scale += npow * p.abs_eval(r);
      npow *= static_cast<double>(big_n);
    }
    // scale == 0 means alpha vanishes exactly (e.g. a deflated root at 0), which is resolved.
    if (scale > 0.0 && std::abs(t.alpha(big_n, z)) <= 64.0 * std::numeric_limits<double>::epsilon() * scale)
      return std::nullopt;
  }
  return value;
}

}  // namespace bkw
