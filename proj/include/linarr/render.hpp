#pragma once

#include <cstddef>
#include <string>

#include "linarr/arrangement.hpp"

namespace linarr {

/// Clip rectangle of the affine chart z = 1.
struct Window {
  mpq_class x_min, x_max, y_min, y_max;

  /// Parses `xmin,xmax,ymin,ymax` (rationals).
  static Window parse(const std::string& text);
};

struct SvgOptions {
  double pixels_per_unit = 40.0;
  double stroke_width = 1.0;
};

struct RenderResult {
  std::string svg;
  std::size_t segments = 0;  // lines that cross the window
  bool has_line_at_infinity = false;
};

/// One <path> per affine line clipped to the window; the line z = 0 is not
/// drawn but listed as "∞" in the legend. Output is byte-stable for fixed
/// input. Throws std::invalid_argument on a degenerate window.
RenderResult render_svg(const Arrangement& arrangement, const Window& window, const SvgOptions& options = {});

}  // namespace linarr
