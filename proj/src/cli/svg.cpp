#include "svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace mgeo::cli {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// SVG's y axis points down.
std::string pt(double x, double y) { return fmt(x) + "," + fmt(-y); }

std::string line(const Vector& a, const Vector& b, const char* cls) {
  return "  <line class=\"" + std::string(cls) + "\" x1=\"" + fmt(a[0]) + "\" y1=\"" + fmt(-a[1]) + "\" x2=\"" +
         fmt(b[0]) + "\" y2=\"" + fmt(-b[1]) + "\"/>\n";
}

}  // namespace

std::string sphere_svg(const NormedSpace& space, const SvgOverlays& overlays, std::size_t samples) {
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.6 -1.6 3.2 3.2\" width=\"640\" height=\"640\">\n";
  s += "  <title>" + space.name() + " unit sphere</title>\n";
  s += "  <style>.sphere{fill:none;stroke:#000;stroke-width:0.008}"
       ".axis{stroke:#bbb;stroke-width:0.004}"
       ".diameter{stroke:#1f77b4;stroke-width:0.01}"
       ".conjugate{stroke:#d62728;stroke-width:0.01}"
       ".flat{stroke:#2ca02c;stroke-width:0.03}"
       ".arrow{stroke:#9467bd;stroke-width:0.008}</style>\n";
  s += "  <line class=\"axis\" x1=\"-1.6\" y1=\"0\" x2=\"1.6\" y2=\"0\"/>\n";
  s += "  <line class=\"axis\" x1=\"0\" y1=\"-1.6\" x2=\"0\" y2=\"1.6\"/>\n";
  s += "  <polyline class=\"sphere\" points=\"";
  for (std::size_t k = 0; k <= samples; ++k) {
    Vector p = sphere_point_2d(space, 2.0 * std::numbers::pi * static_cast<double>(k % samples) / samples);
    if (k) s += ' ';
    s += pt(p[0], p[1]);
  }
  s += "\"/>\n";
  for (const auto& [x, y] : overlays.diameters) {
    s += line(-x, x, "diameter");
    s += line(-y, y, "conjugate");
  }
  for (const auto& [u, v] : overlays.flats) s += line(u, v, "flat");
  for (const auto& [x, y] : overlays.arrows) s += line(x, x + y * 0.25, "arrow");
  s += "</svg>\n";
  return s;
}

}  // namespace mgeo::cli
