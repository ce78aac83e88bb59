// Command-line front end: zeros, limit sets, convergence checks, plots,
// recurrences and the graph polynomials.
//
// Exit codes: 0 success, 1 computation failure (or a failed verification),
// 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "bkw/families.hpp"
#include "bkw/graphpoly.hpp"
#include "bkw/io.hpp"
#include "bkw/limitset.hpp"
#include "bkw/recurrence.hpp"
#include "bkw/rootfind.hpp"
#include "bkw/svg_plot.hpp"
#include "bkw/verify.hpp"

namespace {

using namespace bkw;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kTrendThreshold = 0.7;
constexpr double kConverseThreshold = 0.05;
constexpr double kCoverageThreshold = 0.25;

// Resolving user-supplied names, files and ranges is a usage matter; failures
// there exit with 2 rather than 1.
template <class F>
auto resolve(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

ExpSumFamily family_arg(const std::string& name) {
  return resolve([&] { return load_family(name); });
}

Multigraph graph_arg(const std::string& path) {
  return resolve([&] { return load_graph(path); });
}

std::pair<long, long> range_arg(const std::string& text) {
  auto r = resolve([&] { return parse_index_range(text); });
  if (r.first > r.second) throw UsageError("empty index range '" + text + "'");
  return r;
}

Window window_arg(const std::string& text, int grid) {
  if (text.empty()) {
    Window w;
    w.grid = grid;
    resolve([&] { w.validate(); return 0; });
    return w;
  }
  return resolve([&] { return parse_window(text, grid); });
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string plot_svg(const ExpSumFamily& family, long n_from, long n_to, const std::string& window_text, int grid,
                     bool overlay, bool curves_only, const std::string& title) {
  std::vector<RootSet> zeros;
  if (!curves_only) zeros = family_roots(family, n_from, n_to);

  PlotOptions opts;
  opts.title = title;
  opts.show_zeros = !curves_only;
  if (!window_text.empty()) opts.window = window_arg(window_text, grid);

  if (!overlay && !curves_only) return render_svg(zeros, nullptr, opts);

  // The limit set is computed on the requested window, or else on a window
  // covering both the default region and every zero.
  Window lw = opts.window.value_or(Window{});
  if (!opts.window && !zeros.empty()) {
    const Window z = auto_window(zeros, nullptr);
    lw.re_min = std::min(lw.re_min, z.re_min);
    lw.re_max = std::max(lw.re_max, z.re_max);
    lw.im_min = std::min(lw.im_min, z.im_min);
    lw.im_max = std::max(lw.im_max, z.im_max);
  }
  lw.grid = grid;
  const LimitSet limits = limit_set(family, lw);
  return render_svg(zeros, &limits, opts);
}

int run(int argc, char** argv) {
  CLI::App app{"Zeros and limits of zeros of exponential-sum polynomial families"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bkw 1.0");

  std::string family_name, range_text, out_format, output, window_text, graph_path, limitset_path, preset;
  double tol = kDefaultRootTol;
  int grid = 512;
  bool overlay = false, curves_only = false;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", family_name, "Built-in name (" + [] {
      std::string s;
      for (const auto& n : builtin_family_names()) s += (s.empty() ? "" : ", ") + n;
      return s;
    }() + ") or a family JSON file")->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output, "Output file (default: stdout)");
  };

  auto* zeros = app.add_subcommand("zeros", "Roots of P_n over an index range");
  add_family(zeros);
  zeros->add_option("--n", range_text, "Index range a..b")->required();
  zeros->add_option("--tol", tol, "Relative residual tolerance")->check(CLI::PositiveNumber);
  zeros->add_option("--out", out_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_output(zeros);

  auto* lset = app.add_subcommand("limitset", "Isolated points, persistent zeros and limit curves");
  add_family(lset);
  lset->add_option("--window", window_text, "re_min,re_max,im_min,im_max (default -3,3,-3,3)");
  lset->add_option("--grid", grid, "Grid cells per axis")->check(CLI::Range(16, 1 << 14));
  lset->add_option("--out", out_format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  add_output(lset);

  auto* verify = app.add_subcommand("verify", "Measure convergence of zeros to the limit set");
  add_family(verify);
  verify->add_option("--n", range_text, "Index range a..b")->required();
  verify->add_option("--window", window_text, "re_min,re_max,im_min,im_max");
  verify->add_option("--grid", grid, "Grid cells per axis")->check(CLI::Range(16, 1 << 14));
  verify->add_option("--limitset", limitset_path, "Use a previously computed limit-set JSON file");
  add_output(verify);

  auto* plot = app.add_subcommand("plot", "SVG of zeros, optionally overlaid with the limit set");
  plot->add_option("--family", family_name, "Built-in name or family JSON file");
  plot->add_option("--n", range_text, "Index range a..b");
  plot->add_option("--window", window_text, "re_min,re_max,im_min,im_max (default: fit the data)");
  plot->add_option("--grid", grid, "Grid cells per axis for the limit set")->check(CLI::Range(16, 1 << 14));
  plot->add_flag("--overlay", overlay, "Draw the limit set as well");
  plot->add_flag("--curves-only", curves_only, "Draw only the limit set");
  plot->add_option("--preset", preset, "Canned configuration: " + [] {
    std::string s;
    for (const auto& p : figure_presets()) s += (s.empty() ? "" : ", ") + p.name;
    return s;
  }());
  plot->add_option("--out", out_format, "svg")->check(CLI::IsMember({"svg"}));
  add_output(plot);

  std::string figure_dir;
  auto* figures = app.add_subcommand("figures", "Write every canned plot configuration to a directory");
  figures->add_option("--dir", figure_dir, "Output directory")->required();
  figures->add_option("--grid", grid, "Grid cells per axis for the limit set")->check(CLI::Range(16, 1 << 14));

  auto* recur = app.add_subcommand("recur", "Linear recurrence satisfied by the family");
  add_family(recur);
  add_output(recur);

  auto* fam = app.add_subcommand("family", "Export a family in the JSON file format");
  add_family(fam);
  add_output(fam);

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial of a small connected multigraph");
  tutte_cmd->add_option("--graph", graph_path, "Graph JSON file")->required();
  tutte_cmd->add_option("--out", out_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  add_output(tutte_cmd);

  auto* steele_cmd = app.add_subcommand("steele", "Steele polynomial in exact rationals");
  steele_cmd->add_option("--graph", graph_path, "Graph JSON file")->required();
  steele_cmd->add_option("--out", out_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  add_output(steele_cmd);

  auto* mst = app.add_subcommand("mst-mean", "Expected MST length with uniform [0,1] edge weights");
  mst->add_option("--graph", graph_path, "Graph JSON file")->required();
  add_output(mst);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // Subcommands share out_format, so per-command defaults are applied here.
  if (out_format.empty()) out_format = *zeros ? "csv" : *plot || *figures ? "svg" : "json";

  if (*zeros) {
    const auto family = family_arg(family_name);
    const auto [lo, hi] = range_arg(range_text);
    const auto sets = family_roots(family, lo, hi, tol);
    emit(output, out_format == "json" ? rootsets_to_json(sets).dump(2) : rootsets_to_csv(sets));
    return 0;
  }

  if (*lset) {
    const auto family = family_arg(family_name);
    const Window w = window_arg(window_text, grid);
    const LimitSet limits = limit_set(family, w);
    if (out_format == "svg") {
      PlotOptions opts;
      opts.window = w;
      opts.title = "Limit set of " + family.name();
      emit(output, render_svg({}, &limits, opts));
    } else {
      emit(output, limitset_to_json(limits).dump(2));
    }
    return 0;
  }

  if (*verify) {
    const auto family = family_arg(family_name);
    const auto [lo, hi] = range_arg(range_text);
    LimitSet limits;
    if (!limitset_path.empty()) {
      limits = resolve([&] { return limitset_from_json(read_json_file(limitset_path)); });
    } else {
      limits = limit_set(family, window_arg(window_text, grid));
    }
    const ConvergenceReport report = convergence_report(family, lo, hi, limits);

    json j = convergence_to_json(report);
    std::ostringstream summary;
    bool pass = true;

    const bool trend_ok = lo == hi || report.trend < kTrendThreshold;
    pass &= trend_ok;
    summary << (trend_ok ? "PASS" : "FAIL") << "  trend " << report.trend << " < " << kTrendThreshold
            << (lo == hi ? " (single index, not applicable)" : "") << '\n';

    if (family.size() == 2 && family.effective_index(hi) >= 1) {
      double worst = 0.0;
      int unresolved = 0;
      const auto last = family_roots(family, hi, hi);
      for (const cplx z : last.front().roots) {
        if (const auto r = resolved_converse_residual(family, z, hi))
          worst = std::max(worst, *r);
        else
          ++unresolved;
      }
      const bool ok = worst < kConverseThreshold;
      pass &= ok;
      j["converse_residual"] = worst;
      j["converse_unresolved_roots"] = unresolved;
      summary << (ok ? "PASS" : "FAIL") << "  converse residual at n=" << hi << ": " << worst << " < "
              << kConverseThreshold;
      if (unresolved) summary << " (" << unresolved << " roots skipped: a coefficient is below rounding level)";
      summary << '\n';
    }

    if (!report.coverage.empty()) {
      const double cov = report.max_coverage_distance();
      const bool ok = cov < kCoverageThreshold;
      pass &= ok;
      summary << (ok ? "PASS" : "FAIL") << "  curve coverage at n=" << hi << ": " << cov << " < " << kCoverageThreshold
              << '\n';
    }
    summary << (pass ? "verify: PASS" : "verify: FAIL") << '\n';
    j["pass"] = pass;

    emit(output, j.dump(2));
    std::cerr << summary.str();
    return pass ? 0 : 1;
  }

  if (*plot) {
    if (!preset.empty()) {
      const auto& p = resolve([&]() -> const FigurePreset& { return figure_preset(preset); });
      const auto family = family_arg(p.family);
      emit(output, plot_svg(family, p.n_from, p.n_to, window_text, grid, true, p.curves_only, p.title));
      return 0;
    }
    if (family_name.empty() || range_text.empty()) throw UsageError("plot needs --preset, or --family with --n");
    const auto family = family_arg(family_name);
    const auto [lo, hi] = range_arg(range_text);
    const std::string title = "Zeros of " + family.name() + ", " + std::to_string(lo) + " <= n <= " + std::to_string(hi);
    emit(output, plot_svg(family, lo, hi, window_text, grid, overlay, curves_only, title));
    return 0;
  }

  if (*figures) {
    std::filesystem::create_directories(figure_dir);
    for (const auto& p : figure_presets()) {
      const auto family = family_arg(p.family);
      const auto path = (std::filesystem::path(figure_dir) / (p.name + ".svg")).string();
      emit(path, plot_svg(family, p.n_from, p.n_to, "", grid, true, p.curves_only, p.title));
      std::cerr << "wrote " << path << '\n';
    }
    return 0;
  }

  if (*recur) {
    emit(output, recurrence_to_json(to_recurrence(family_arg(family_name))).dump(2));
    return 0;
  }

  if (*fam) {
    emit(output, family_to_json(family_arg(family_name)).dump(2));
    return 0;
  }

  if (*tutte_cmd) {
    const Multigraph g = graph_arg(graph_path);
    const BivarIntPoly t = resolve([&] { return tutte(g); });
    emit(output, out_format == "text" ? to_string(t) : tutte_to_json(t).dump(2));
    return 0;
  }

  if (*steele_cmd) {
    const Multigraph g = graph_arg(graph_path);
    const RationalUniPoly s = resolve([&] { return steele(g); });
    emit(output, out_format == "text" ? to_string(s) : rational_poly_to_json(s).dump(2));
    return 0;
  }

  if (*mst) {
    const Multigraph g = graph_arg(graph_path);
    emit(output, rational_to_string(resolve([&] { return mean_mst_length(g); })));
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "bkw: " << e.what() << '\n';
    return 2;
  } catch (const RootFindingError& e) {
    std::cerr << "bkw: " << e.what() << " (worst residual " << e.worst_residual() << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "bkw: " << e.what() << '\n';
    return 1;
  }
}
