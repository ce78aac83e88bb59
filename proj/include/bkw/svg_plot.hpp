#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bkw/limitset.hpp"
#include "bkw/rootfind.hpp"

namespace bkw {

struct PlotOptions {
  /// Plotted region; chosen from the data when absent.
  std::optional<Window> window;
  int width = 640;
  int height = 640;
  std::string title;
  bool show_zeros = true;
};

/// Square window enclosing every root and limit-set feature with a 10% margin.
/// Falls back to [-3,3]^2 when there is nothing to show.
Window auto_window(const std::vector<RootSet>& zeros, const LimitSet* limits);

/// Zeros as dots, limit curves as polylines, isolated and persistent points as
/// crosses, with axes, ticks and a legend. Anything outside the window is
/// clipped. Output depends only on the inputs.
std::string render_svg(const std::vector<RootSet>& zeros, const LimitSet* limits, const PlotOptions& options);

/// A canned plot configuration (family, index range, overlay mode).
struct FigurePreset {
  std::string name;
  std::string family;
  long n_from;
  long n_to;
  /// Draw only the limit set.
  bool curves_only;
  std::string title;
};

const std::vector<FigurePreset>& figure_presets();
/// Throws std::invalid_argument for an unknown preset name.
const FigurePreset& figure_preset(const std::string& name);

}  // namespace bkw
