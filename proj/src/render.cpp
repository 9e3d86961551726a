#include "linarr/render.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace linarr {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

using Segment = std::pair<std::pair<double, double>, std::pair<double, double>>;

// Clips a*x + b*y + c = 0 to [x0,x1] x [y0,y1] by parametrising along the
// direction (-b, a) and intersecting the slab constraints.
std::optional<Segment> clip(double a, double b, double c, double x0, double x1, double y0, double y1) {
  const double norm2 = a * a + b * b;
  const double px = -a * c / norm2;
  const double py = -b * c / norm2;
  const double dx = -b, dy = a;
  double t_lo = -INFINITY, t_hi = INFINITY;
  auto slab = [&](double p, double d, double lo, double hi) {
    if (std::abs(d) < 1e-15) return p >= lo && p <= hi;
    double ta = (lo - p) / d, tb = (hi - p) / d;
    if (ta > tb) std::swap(ta, tb);
    t_lo = std::max(t_lo, ta);
    t_hi = std::min(t_hi, tb);
    return true;
  };
  if (!slab(px, dx, x0, x1) || !slab(py, dy, y0, y1)) return std::nullopt;
  if (!(t_hi - t_lo > 1e-12)) return std::nullopt;
  return Segment{{px + t_lo * dx, py + t_lo * dy}, {px + t_hi * dx, py + t_hi * dy}};
}

// Exact value of a decimal literal such as -7.25.
std::optional<mpq_class> parse_decimal(const std::string& text) {
  static const std::regex pattern(R"(([+-]?)(\d*)\.(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) return std::nullopt;
  mpz_class scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, m[3].str().size());
  mpq_class v(mpz_class(m[2].str().empty() ? "0" : m[2].str()) * scale + mpz_class(m[3].str()), scale);
  v.canonicalize();
  return m[1] == "-" ? -v : v;
}

}  // namespace

Window Window::parse(const std::string& text) {
  const auto cells = split_row(text);
  if (cells.size() != 4) throw ParseError("window needs four rationals xmin,xmax,ymin,ymax");
  Window w;
  mpq_class* slots[4] = {&w.x_min, &w.x_max, &w.y_min, &w.y_max};
  for (int i = 0; i < 4; ++i) {
    if (auto d = parse_decimal(cells[i])) {
      *slots[i] = *d;
      continue;
    }
    const FieldElement v = FieldElement::parse(cells[i]);
    if (!v.is_rational()) throw ParseError("window bounds must be rational");
    *slots[i] = v.rational_part();
  }
  return w;
}

RenderResult render_svg(const Arrangement& arrangement, const Window& window, const SvgOptions& options) {
  if (!(window.x_min < window.x_max) || !(window.y_min < window.y_max)) {
    throw std::invalid_argument("degenerate render window");
  }
  const double x0 = window.x_min.get_d(), x1 = window.x_max.get_d();
  const double y0 = window.y_min.get_d(), y1 = window.y_max.get_d();
  const double s = options.pixels_per_unit;
  const double width = (x1 - x0) * s, height = (y1 - y0) * s;
  auto sx = [&](double x) { return (x - x0) * s; };
  auto sy = [&](double y) { return (y1 - y) * s; };

  RenderResult result;
  std::ostringstream paths;
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    const auto& l = arrangement.line(i);
    if (l[0].is_zero() && l[1].is_zero()) {
      result.has_line_at_infinity = true;
      continue;
    }
    const auto seg = clip(l[0].to_double(), l[1].to_double(), l[2].to_double(), x0, x1, y0, y1);
    if (!seg) continue;
    ++result.segments;
    paths << "  <path d=\"M " << fmt(sx(seg->first.first)) << ' ' << fmt(sy(seg->first.second)) << " L "
          << fmt(sx(seg->second.first)) << ' ' << fmt(sy(seg->second.second)) << "\" data-line=\"" << i
          << "\"><title>" << l.equation() << "</title></path>\n";
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(options.stroke_width) << "\">\n";
  svg << paths.str();
  svg << "  </g>\n";
  if (result.has_line_at_infinity) {
    svg << "  <g class=\"legend\" font-family=\"serif\" font-size=\"16\">\n"
        << "    <text x=\"" << fmt(width - 24) << "\" y=\"" << fmt(20) << "\">∞</text>\n"
        << "    <text x=\"" << fmt(width - 120) << "\" y=\"" << fmt(40)
        << "\" font-size=\"11\">∞ : line at infinity z = 0</text>\n"
        << "  </g>\n";
  }
  svg << "</svg>\n";
  result.svg = svg.str();
  return result;
}

}  // namespace linarr
