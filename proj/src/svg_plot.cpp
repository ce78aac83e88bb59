#include "bkw/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bkw {

namespace {

constexpr double kMargin = 56.0;  // room for tick labels around the plot area

std::string fmt(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  // "-0.00" and "0.00" must print identically or output depends on rounding noise
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// 1, 2 or 5 times a power of ten giving roughly `target` intervals over span.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (const double m : {1.0, 2.0, 5.0})
    if (raw <= m * mag) return m * mag;
  return 10.0 * mag;
}

int tick_digits(double step) { return std::max(0, static_cast<int>(-std::floor(std::log10(step) + 1e-9))); }

// Blue for the smallest index through red for the largest.
std::string index_colour(long n, long lo, long hi) {
  const double s = hi > lo ? static_cast<double>(n - lo) / static_cast<double>(hi - lo) : 0.0;
  const int r = static_cast<int>(std::lround(30 + 200 * s));
  const int g = static_cast<int>(std::lround(80 + 40 * (1 - std::abs(2 * s - 1))));
  const int b = static_cast<int>(std::lround(220 - 190 * s));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

class Canvas {
 public:
  Canvas(const Window& w, int width, int height) : w_(w), width_(width), height_(height) {}

  double px(double re) const { return kMargin + (re - w_.re_min) / (w_.re_max - w_.re_min) * plot_w(); }
  double py(double im) const { return kMargin + (w_.im_max - im) / (w_.im_max - w_.im_min) * plot_h(); }
  double plot_w() const { return width_ - 2 * kMargin; }
  double plot_h() const { return height_ - 2 * kMargin; }

 private:
  Window w_;
  int width_;
  int height_;
};

void cross(std::ostringstream& os, double x, double y, const char* colour) {
  const double r = 5.0;
  os << "<path d=\"M" << fmt(x - r) << ',' << fmt(y - r) << 'L' << fmt(x + r) << ',' << fmt(y + r) << 'M'
     << fmt(x - r) << ',' << fmt(y + r) << 'L' << fmt(x + r) << ',' << fmt(y - r) << "\" stroke=\"" << colour
     << "\" stroke-width=\"2\" fill=\"none\"/>\n";
}

}  // namespace

Window auto_window(const std::vector<RootSet>& zeros, const LimitSet* limits) {
  double lo_re = std::numeric_limits<double>::infinity(), hi_re = -lo_re;
  double lo_im = lo_re, hi_im = -lo_re;
  auto take = [&](cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return;
    lo_re = std::min(lo_re, z.real());
    hi_re = std::max(hi_re, z.real());
    lo_im = std::min(lo_im, z.imag());
    hi_im = std::max(hi_im, z.imag());
  };
  for (const auto& rs : zeros)
    for (const cplx z : rs.roots) take(z);
  if (limits) {
    for (const auto& ip : limits->isolated) take(ip.point);
    for (const cplx p : limits->persistent) take(p);
    for (const auto& c : limits->curves)
      for (const cplx p : c.points) take(p);
  }
  if (!(lo_re <= hi_re)) return Window{};

  // Square aspect so circles look like circles.
  const double half = 0.5 * std::max({hi_re - lo_re, hi_im - lo_im, 0.5}) * 1.1;
  const double c_re = 0.5 * (lo_re + hi_re), c_im = 0.5 * (lo_im + hi_im);
  return Window{c_re - half, c_re + half, c_im - half, c_im + half, limits ? limits->window.grid : 512};
}

std::string render_svg(const std::vector<RootSet>& zeros, const LimitSet* limits, const PlotOptions& options) {
  if (options.width < 4 * kMargin || options.height < 4 * kMargin)
    throw std::invalid_argument("render_svg: canvas too small");
  const Window w = options.window ? *options.window : auto_window(zeros, limits);
  w.validate();
  const Canvas cv(w, options.width, options.height);
  const double x0 = kMargin, y0 = kMargin, x1 = kMargin + cv.plot_w(), y1 = kMargin + cv.plot_h();

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << options.height
     << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\" font-family=\"sans-serif\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<defs><clipPath id=\"plot\"><rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(cv.plot_w())
     << "\" height=\"" << fmt(cv.plot_h()) << "\"/></clipPath></defs>\n";
  if (!options.title.empty())
    os << "<text x=\"" << fmt(options.width / 2.0) << "\" y=\"" << fmt(kMargin / 2) << "\" font-size=\"14\" text-anchor=\"middle\">"
       << escape(options.title) << "</text>\n";

  // Frame, grid and ticks.
  os << "<g id=\"axes\" font-size=\"11\">\n"
     << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(cv.plot_w()) << "\" height=\""
     << fmt(cv.plot_h()) << "\" fill=\"none\" stroke=\"black\"/>\n";
  const double step_re = nice_step(w.re_max - w.re_min, 6), step_im = nice_step(w.im_max - w.im_min, 6);
  for (double t = std::ceil(w.re_min / step_re) * step_re; t <= w.re_max + 1e-9 * step_re; t += step_re) {
    const double x = cv.px(t);
    os << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(y1 + 5)
       << "\" stroke=\"black\"/>\n<text x=\"" << fmt(x) << "\" y=\"" << fmt(y1 + 18) << "\" text-anchor=\"middle\">"
       << fmt(t, tick_digits(step_re)) << "</text>\n";
  }
  for (double t = std::ceil(w.im_min / step_im) * step_im; t <= w.im_max + 1e-9 * step_im; t += step_im) {
    const double y = cv.py(t);
    os << "<line x1=\"" << fmt(x0 - 5) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x0) << "\" y2=\"" << fmt(y)
       << "\" stroke=\"black\"/>\n<text x=\"" << fmt(x0 - 8) << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">"
       << fmt(t, tick_digits(step_im)) << "</text>\n";
  }
  if (w.re_min < 0 && w.re_max > 0)
    os << "<line x1=\"" << fmt(cv.px(0)) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(cv.px(0)) << "\" y2=\"" << fmt(y1)
       << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4,3\"/>\n";
  if (w.im_min < 0 && w.im_max > 0)
    os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(cv.py(0)) << "\" x2=\"" << fmt(x1) << "\" y2=\"" << fmt(cv.py(0))
       << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4,3\"/>\n";
  os << "<text x=\"" << fmt((x0 + x1) / 2) << "\" y=\"" << fmt(y1 + 38) << "\" text-anchor=\"middle\">Re</text>\n"
     << "<text x=\"" << fmt(x0 - 40) << "\" y=\"" << fmt((y0 + y1) / 2) << "\" text-anchor=\"middle\">Im</text>\n"
     << "</g>\n";

  std::size_t curve_count = 0, marker_count = 0;
  if (limits) {
    os << "<g id=\"curves\" clip-path=\"url(#plot)\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\">\n";
    for (const auto& c : limits->curves) {
      if (c.points.empty()) continue;
      ++curve_count;
      os << "<path d=\"";
      for (std::size_t k = 0; k < c.points.size(); ++k)
        os << (k ? 'L' : 'M') << fmt(cv.px(c.points[k].real())) << ',' << fmt(cv.py(c.points[k].imag()));
      os << "\"/>\n";
    }
    os << "</g>\n<g id=\"points\">\n";
    for (const auto& ip : limits->isolated)
      if (w.contains(ip.point)) {
        cross(os, cv.px(ip.point.real()), cv.py(ip.point.imag()), "#008800");
        ++marker_count;
      }
    for (const cplx p : limits->persistent)
      if (w.contains(p)) {
        cross(os, cv.px(p.real()), cv.py(p.imag()), "#aa00aa");
        ++marker_count;
      }
    os << "</g>\n";
  }

  long n_lo = 0, n_hi = 0;
  if (options.show_zeros && !zeros.empty()) {
    n_lo = zeros.front().n;
    n_hi = zeros.back().n;
    os << "<g id=\"zeros\">\n";
    for (const auto& rs : zeros) {
      const std::string colour = index_colour(rs.n, n_lo, n_hi);
      for (const cplx z : rs.roots)
        if (w.contains(z))
          os << "<circle cx=\"" << fmt(cv.px(z.real())) << "\" cy=\"" << fmt(cv.py(z.imag())) << "\" r=\"1.8\" fill=\""
             << colour << "\"/>\n";
    }
    os << "</g>\n";
  }

  // Legend in the top-right corner of the plot area.
  os << "<g id=\"legend\" font-size=\"11\">\n";
  double ly = y0 + 16;
  const double lx = x1 - 150;
  if (options.show_zeros && !zeros.empty()) {
    os << "<circle cx=\"" << fmt(lx) << "\" cy=\"" << fmt(ly - 4) << "\" r=\"3\" fill=\"" << index_colour(n_lo, n_lo, n_hi)
       << "\"/><circle cx=\"" << fmt(lx + 8) << "\" cy=\"" << fmt(ly - 4) << "\" r=\"3\" fill=\""
       << index_colour(n_hi, n_lo, n_hi) << "\"/>\n<text x=\"" << fmt(lx + 18) << "\" y=\"" << fmt(ly) << "\">zeros, n = "
       << n_lo << ".." << n_hi << "</text>\n";
    ly += 16;
  }
  if (curve_count) {
    os << "<line x1=\"" << fmt(lx - 4) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\"" << fmt(lx + 12) << "\" y2=\""
       << fmt(ly - 4) << "\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n<text x=\"" << fmt(lx + 18) << "\" y=\""
       << fmt(ly) << "\">limit curves</text>\n";
    ly += 16;
  }
  if (marker_count) {
    cross(os, lx + 4, ly - 4, "#008800");
    os << "<text x=\"" << fmt(lx + 18) << "\" y=\"" << fmt(ly) << "\">isolated / persistent</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = {
      {"f", "f", 2, 30, false, "Zeros of f_n(x) = x^(n+1) - 2x^n + x^2 + n^2, 2 <= n <= 30"},
      {"g", "g", 2, 30, false, "Zeros of g_n(x) = x^(n+1) - 2x^n + n^2 x^2 + 5nx + 1, 2 <= n <= 30"},
      {"independence", "independence", 2, 40, false, "Zeros of n(1+x)^n - (n-1), 2 <= n <= 40"},
      {"screl", "screl", 3, 40, false, "Zeros of 2p^n - p^(2n) + n(1-p)^2 p^(2n-2), 3 <= n <= 40"},
      {"domination", "domination", 2, 30, false, "Zeros of the domination polynomials B_n, 2 <= n <= 30"},
      {"domination-curves", "domination", 2, 30, true, "Limiting curves of the zeros of B_n"},
  };
  return presets;
}

const FigurePreset& figure_preset(const std::string& name) {
  for (const auto& p : figure_presets())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown figure preset '" + name + "'");
}

}  // namespace bkw
