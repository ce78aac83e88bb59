#include <doctest.h>

#include <regex>
#include <stdexcept>

#include "bkw/families.hpp"
#include "bkw/svg_plot.hpp"

using namespace bkw;

namespace {

int count(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("zeros, curves and crosses are all drawn") {
  const auto& fam = make_g().family;
  const auto zeros = family_roots(fam, 2, 10);
  const LimitSet ls = limit_set(fam, Window{-3, 3, -3, 3, 128});
  PlotOptions opts;
  opts.window = Window{-3, 3, -3, 3, 128};
  opts.title = "g & co <test>";
  const std::string svg = render_svg(zeros, &ls, opts);

  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("g &amp; co &lt;test&gt;") != std::string::npos);
  std::size_t total = 0;
  for (const auto& rs : zeros)
    for (const cplx z : rs.roots) total += opts.window->contains(z);
  CHECK(count(svg, "<circle") == static_cast<int>(total) + 2);  // plus two legend swatches
  CHECK(svg.find("id=\"curves\"") != std::string::npos);
  CHECK(svg.find("limit curves") != std::string::npos);
  CHECK(svg.find("isolated / persistent") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  const auto zeros = family_roots(make_f().family, 2, 8);
  const LimitSet ls = limit_set(make_f().family, Window{-3, 3, -3, 3, 64});
  CHECK(render_svg(zeros, &ls, {}) == render_svg(zeros, &ls, {}));
}

TEST_CASE("data outside the window is clipped, leaving the axes") {
  const auto zeros = family_roots(make_steele_cycle().family, 3, 6);
  PlotOptions opts;
  opts.window = Window{10, 11, 10, 11, 16};
  const std::string svg = render_svg(zeros, nullptr, opts);
  CHECK(count(svg, "<circle") == 2);  // the legend only
  CHECK(svg.find("id=\"axes\"") != std::string::npos);
  CHECK(std::regex_search(svg, std::regex(">10\\.[0-9]<")));
}

TEST_CASE("auto window encloses the data and is square") {
  RootSet rs;
  rs.roots = {cplx(-1, 0), cplx(3, 0.5)};
  const Window w = auto_window({rs}, nullptr);
  CHECK(w.contains(rs.roots[0]));
  CHECK(w.contains(rs.roots[1]));
  CHECK((w.re_max - w.re_min) == doctest::Approx(w.im_max - w.im_min));
  CHECK(auto_window({}, nullptr) == Window{});
}

TEST_CASE("bad canvas") {
  PlotOptions opts;
  opts.width = 50;
  CHECK_THROWS_AS(render_svg({}, nullptr, opts), std::invalid_argument);
}

TEST_CASE("figure presets") {
  const auto& presets = figure_presets();
  CHECK(presets.size() == 6);
  for (const auto& p : presets) CHECK(find_family(p.family));
  CHECK(figure_preset("g").n_to == 30);
  CHECK(figure_preset("independence").n_to == 40);
  CHECK(figure_preset("screl").n_from == 3);
  CHECK(figure_preset("domination-curves").curves_only);
  CHECK_THROWS_AS(figure_preset("h"), std::invalid_argument);
}
