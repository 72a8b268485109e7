#include "gridtrail/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gridtrail/errors.hpp"

namespace gridtrail {

namespace {

struct Point2 {
  double x, y;
};

// Fixed orthographic view: turn 25 degrees about z, then tilt by 20 degrees.
Point2 project(const std::vector<double>& p, Projection projection) {
  if (projection == Projection::planar) return {p[0], p[1]};
  constexpr double kPi = 3.14159265358979323846;
  const double a = 25.0 * kPi / 180.0;
  const double b = 20.0 * kPi / 180.0;
  const double u = p[0] * std::cos(a) - p[1] * std::sin(a);
  const double w = p[0] * std::sin(a) + p[1] * std::cos(a);
  return {u, p[2] * std::cos(b) + w * std::sin(b)};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0 ? 0.0 : v);
  return buf;
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

}  // namespace

RenderSpec RenderSpec::for_dimension(std::size_t k) {
  RenderSpec spec;
  if (k == 2) {
    spec.projection = Projection::planar;
  } else if (k == 3) {
    spec.projection = Projection::orthographic_3d;
  } else {
    throw DomainError("render: unsupported dimension " + std::to_string(k) + " (only 2 and 3)");
  }
  return spec;
}

void RenderSpec::validate(std::size_t k) const {
  if (width <= 0 || height <= 0 || point_radius <= 0 || stroke_width <= 0) {
    throw DomainError("render: sizes must be positive");
  }
  if (k != 2 && k != 3) throw DomainError("render: unsupported dimension " + std::to_string(k) + " (only 2 and 3)");
  if ((projection == Projection::planar) != (k == 2)) {
    throw DomainError("render: planar projection is for 2-D grids, orthographic for 3-D");
  }
}

std::string render_svg(const CoverageReport& report, const RenderSpec& spec) {
  const std::size_t k = report.grid.dimension();
  spec.validate(k);

  std::vector<Point2> grid_xy;
  std::vector<bool> covered;
  for (const auto& p : report.covered) {
    grid_xy.push_back(project({p.coords.begin(), p.coords.end()}, spec.projection));
    covered.push_back(true);
  }
  for (const auto& p : report.uncovered) {
    grid_xy.push_back(project({p.coords.begin(), p.coords.end()}, spec.projection));
    covered.push_back(false);
  }
  std::vector<Point2> vert_xy;
  for (const Vertex& v : report.trail.vertices) {
    std::vector<double> c;
    for (const QuadExt& x : v.coords) c.push_back(std::stod(x.to_decimal(30)));
    vert_xy.push_back(project(c, spec.projection));
  }

  double minx = std::numeric_limits<double>::infinity(), miny = minx;
  double maxx = -minx, maxy = -minx;
  for (const auto* set : {&grid_xy, &vert_xy}) {
    for (const Point2& p : *set) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  const double margin = 4 * spec.point_radius + 10;
  const double span_x = std::max(maxx - minx, 1e-9);
  const double span_y = std::max(maxy - miny, 1e-9);
  const double scale = std::min((spec.width - 2 * margin) / span_x, (spec.height - 2 * margin) / span_y);
  const double off_x = (spec.width - scale * span_x) / 2;
  const double off_y = (spec.height - scale * span_y) / 2;
  // SVG y grows downwards.
  auto sx = [&](const Point2& p) { return off_x + (p.x - minx) * scale; };
  auto sy = [&](const Point2& p) { return spec.height - (off_y + (p.y - miny) * scale); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
     << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<!-- grid " << report.grid.to_string() << ", " << report.link_count << " links, "
     << (report.is_covering ? "covering" : "not covering") << " -->\n";

  os << "<g id=\"links\" stroke=\"#1f5fbf\" stroke-width=\"" << num(spec.stroke_width)
     << "\" stroke-linecap=\"round\">\n";
  for (std::size_t i = 0; i + 1 < vert_xy.size(); ++i) {
    os << "<line class=\"link\" x1=\"" << num(sx(vert_xy[i])) << "\" y1=\"" << num(sy(vert_xy[i])) << "\" x2=\""
       << num(sx(vert_xy[i + 1])) << "\" y2=\"" << num(sy(vert_xy[i + 1])) << "\"/>\n";
  }
  os << "</g>\n<g id=\"link-labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#1f5fbf\">\n";
  for (std::size_t i = 0; i + 1 < vert_xy.size(); ++i) {
    const Point2 mid{(vert_xy[i].x + vert_xy[i + 1].x) / 2, (vert_xy[i].y + vert_xy[i + 1].y) / 2};
    os << "<text class=\"link-label\" x=\"" << num(sx(mid) + 4) << "\" y=\"" << num(sy(mid) - 4) << "\">" << i + 1
       << "</text>\n";
  }
  os << "</g>\n<g id=\"points\">\n";
  for (std::size_t i = 0; i < grid_xy.size(); ++i) {
    os << "<circle class=\"point " << (covered[i] ? "covered" : "uncovered") << "\" cx=\"" << num(sx(grid_xy[i]))
       << "\" cy=\"" << num(sy(grid_xy[i])) << "\" r=\"" << num(spec.point_radius) << '"'
       << (covered[i] ? " fill=\"black\"" : " fill=\"none\" stroke=\"red\" stroke-width=\"2\"") << "/>\n";
  }
  os << "</g>\n<g id=\"vertices\" fill=\"#1f5fbf\">\n";
  for (std::size_t i = 0; i < vert_xy.size(); ++i) {
    const Vertex& v = report.trail.vertices[i];
    std::string approx;
    for (std::size_t a = 0; a < v.coords.size(); ++a) approx += (a ? ", " : "") + v.coords[a].to_decimal(30);
    os << "<rect class=\"vertex\" x=\"" << num(sx(vert_xy[i]) - 2) << "\" y=\"" << num(sy(vert_xy[i]) - 2)
       << "\" width=\"4\" height=\"4\"><title>v" << i << ' ' << escape(to_string(v)) << " = (" << approx
       << ")</title></rect>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace gridtrail
