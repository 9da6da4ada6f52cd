#include "wallcross/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace wallcross {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double minx = 0, miny = 0, scale = 1, offx = 0, offy = 0;
  int canvas = 800;
  bool line = false;

  std::pair<double, double> map(const RatVector& p) const {
    const double x = to_double(p[0]);
    const double y = line ? 0.0 : to_double(p[1]);
    return {offx + (x - minx) * scale, canvas - (offy + (y - miny) * scale)};
  }
};

}  // namespace

std::string render_svg(const ChamberComplex& complex, const InvariantTable* labels, const RenderOptions& opts) {
  const WeightedXray& x = complex.xray();
  const int d = x.torus_rank();
  if (d > 2) throw XrayError("rendering supports d ≤ 2");
  const std::size_t top = x.top();
  const Polytope& hull = x.wall(top);

  Frame fr;
  fr.canvas = opts.canvas;
  fr.line = d == 1;
  double maxx = -INFINITY, maxy = -INFINITY;
  fr.minx = fr.miny = INFINITY;
  for (const auto& v : hull.vertices()) {
    const double vx = to_double(v[0]);
    const double vy = d == 1 ? 0.0 : to_double(v[1]);
    fr.minx = std::min(fr.minx, vx);
    fr.miny = std::min(fr.miny, vy);
    maxx = std::max(maxx, vx);
    maxy = std::max(maxy, vy);
  }
  const double inner = opts.canvas * (1.0 - 2.0 * opts.margin);
  const double span = std::max({maxx - fr.minx, maxy - fr.miny, 1e-12});
  fr.scale = inner / span;
  fr.offx = opts.canvas * opts.margin + (inner - (maxx - fr.minx) * fr.scale) / 2.0;
  fr.offy = opts.canvas * opts.margin + (inner - (maxy - fr.miny) * fr.scale) / 2.0;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.canvas << "\" height=\""
      << opts.canvas << "\" viewBox=\"0 0 " << opts.canvas << ' ' << opts.canvas << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << opts.canvas << "\" height=\"" << opts.canvas
      << "\" fill=\"white\"/>\n";

  if (d == 2 && hull.dim() == 2) {
    // Boundary polygon in angular order about the centroid.
    const RatVector c = relative_interior_point(hull);
    std::vector<RatVector> ring = hull.vertices();
    std::sort(ring.begin(), ring.end(), [&](const RatVector& a, const RatVector& b) {
      return std::atan2(to_double(a[1] - c[1]), to_double(a[0] - c[0])) <
             std::atan2(to_double(b[1] - c[1]), to_double(b[0] - c[0]));
    });
    svg << "<polygon points=\"";
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto [px, py] = fr.map(ring[i]);
      svg << (i ? " " : "") << num(px) << ',' << num(py);
    }
    svg << "\" fill=\"#eef3fb\" stroke=\"none\"/>\n";
  }

  svg << "<g stroke=\"#1f3b73\" stroke-width=\"2\" fill=\"none\">\n";
  for (const auto& s : x.strata()) {
    if (s.wall.dim() != 1) continue;
    const auto [x1, y1] = fr.map(s.wall.vertices().front());
    const auto [x2, y2] = fr.map(s.wall.vertices().back());
    svg << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
        << "\"><title>" << escape(s.id) << "</title></line>\n";
  }
  svg << "</g>\n<g fill=\"#1f3b73\">\n";
  for (const auto& s : x.strata()) {
    if (!s.is_vertex()) continue;
    const auto [px, py] = fr.map(s.wall.vertices().front());
    svg << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py) << "\" r=\"6\"><title>" << escape(s.id)
        << "</title></circle>\n";
  }
  svg << "</g>\n";

  if (labels) {
    svg << "<g font-family=\"sans-serif\" font-size=\"20\" text-anchor=\"middle\" fill=\"#b22222\">\n";
    const auto& subs = complex.subchambers(top);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      auto [px, py] = fr.map(subs[i].rep);
      if (d == 1) py -= 16;
      svg << "<text x=\"" << num(px) << "\" y=\"" << num(py) << "\">"
          << escape(format_value(labels->value(x.stratum(top).id, i), labels->ring())) << "</text>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace wallcross
