#include "opaque/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace opaque {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

// SVG's y axis points down.
std::string xy(Point2 p) { return num(p.x) + "," + num(-p.y); }

}  // namespace

std::string render_svg(const MultiScene& scene, const SvgOptions& options) {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = x0;
  double x1 = -x0;
  double y1 = -x0;
  auto grow = [&](Point2 p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  };
  for (const auto& o : scene.objects)
    for (const auto& p : o.vertices()) grow(p);
  for (const auto& s : scene.barrier) {
    grow(s.a());
    grow(s.b());
  }
  if (x0 > x1) x0 = y0 = -1, x1 = y1 = 1;
  double diam = std::hypot(x1 - x0, y1 - y0);
  if (diam <= 0) diam = 1.0;
  const double pad = 0.1 * diam;
  const double stroke = 0.02 * diam;
  const double vw = x1 - x0 + 2 * pad;
  const double vh = y1 - y0 + 2 * pad;
  const int height_px = std::max(1, static_cast<int>(options.width_px * vh / vw + 0.5));

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width_px << "\" height=\""
     << height_px << "\" viewBox=\"" << num(x0 - pad) << " " << num(-(y1 + pad)) << " " << num(vw) << " "
     << num(vh) << "\">\n";
  for (const auto& o : scene.objects) {
    os << "  <polygon class=\"object\" fill=\"#c9d6ea\" stroke=\"#5a6f8f\" stroke-width=\"" << num(0.25 * stroke)
       << "\" points=\"";
    for (std::size_t i = 0; i < o.size(); ++i) os << (i ? " " : "") << xy(o.vertex(i));
    os << "\"/>\n";
  }
  for (const auto& s : scene.barrier) {
    os << "  <path class=\"barrier\" fill=\"none\" stroke=\"#1a1a1a\" stroke-linecap=\"round\" stroke-width=\""
       << num(stroke) << "\" d=\"M " << xy(s.a()) << " L " << xy(s.b()) << "\"/>\n";
  }
  std::optional<std::pair<Point2, Point2>> overlay;
  if (options.line_witness) {
    const Point2 u = unit_direction(options.line_witness->angle);
    const Point2 c = options.line_witness->offset * u;
    const Point2 t{-u.y, u.x};
    overlay = {{c - 2.0 * diam * t, c + 2.0 * diam * t}};
  } else if (options.ray_witness) {
    const Point2 o = options.ray_witness->origin;
    overlay = {{o, o + 2.0 * diam * unit_direction(options.ray_witness->direction)}};
  }
  if (overlay) {
    os << "  <line class=\"witness\" stroke=\"#c0392b\" stroke-width=\"" << num(0.5 * stroke)
       << "\" stroke-dasharray=\"" << num(2 * stroke) << " " << num(stroke) << "\" x1=\"" << num(overlay->first.x)
       << "\" y1=\"" << num(-overlay->first.y) << "\" x2=\"" << num(overlay->second.x) << "\" y2=\""
       << num(-overlay->second.y) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const Scene& scene, const SvgOptions& options) {
  MultiScene m;
  if (!scene.object.empty()) m.objects.push_back(scene.object);
  m.barrier = scene.barrier;
  return render_svg(m, options);
}

}  // namespace opaque
