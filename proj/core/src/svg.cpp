#include "hexperim/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "hexperim/errors.hpp"
#include "hexperim/lattice.hpp"
#include "hexperim/midpoint.hpp"

namespace hexperim {

namespace {

// corner offsets of a unit-side hexagon, first corner straight up, ccw.
std::array<Vec2, 6> hex_corners() {
  std::array<Vec2, 6> out{};
  for (int k = 0; k < 6; ++k) {
    double ang = std::numbers::pi * (90.0 + 60.0 * k) / 180.0;
    out[k] = {std::cos(ang), std::sin(ang)};
  }
  return out;
}

// maps lattice coordinates to pixel coordinates; y is flipped so the
// lattice "up" direction points up on screen.
struct Canvas {
  double scale = 1.0;
  double margin = 0.0;
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;

  void include(Vec2 p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  double px(double x) const { return (x - min_x) * scale + margin; }
  double py(double y) const { return (max_y - y) * scale + margin; }
  double width() const { return (max_x - min_x) * scale + 2.0 * margin; }
  double height() const { return (max_y - min_y) * scale + 2.0 * margin; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return std::string(buf);
}

std::string points_attr(const Canvas& canvas, const std::vector<Vec2>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += fmt(canvas.px(pts[i].x));
    out += ',';
    out += fmt(canvas.py(pts[i].y));
  }
  return out;
}

std::string document_open(const Canvas& canvas) {
  std::string w = fmt(canvas.width());
  std::string h = fmt(canvas.height());
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w +
         "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  out +=
      "<style>.cell{fill:#f4e9d4;stroke:#333;stroke-width:1.5}"
      ".midpoint{fill:none;stroke:#c0392b;stroke-width:1.5}"
      ".path{fill:none;stroke:#2c3e50;stroke-width:2}</style>\n";
  return out;
}

void check_options(const RenderOptions& opts) {
  if (!(opts.scale > 0.0))
    throw validation_error("svg scale must be positive");
}

}  // namespace

std::string cluster_svg(const Cluster& c, const RenderOptions& opts) {
  check_options(opts);
  std::array<Vec2, 6> corners = hex_corners();

  Canvas canvas;
  canvas.scale = opts.scale;
  canvas.margin = 0.25 * opts.scale;
  std::vector<std::vector<Vec2>> cells;
  cells.reserve(c.size());
  for (CellCoord cell : c.cells()) {
    Vec2 ctr = cell_center(cell);
    std::vector<Vec2> pts;
    pts.reserve(6);
    for (Vec2 k : corners) pts.push_back({ctr.x + k.x, ctr.y + k.y});
    for (Vec2 p : pts) canvas.include(p);
    cells.push_back(std::move(pts));
  }

  std::string out = document_open(canvas);
  for (const std::vector<Vec2>& pts : cells)
    out += "<polygon class=\"cell\" points=\"" + points_attr(canvas, pts) +
           "\"/>\n";

  if (opts.midpoint_overlay) {
    BoundaryPath bp = boundary_components(c);
    for (const PathWord& loop : bp.components) {
      MidpointPolygon poly = midpoint_polygon(loop);
      out += "<polygon class=\"midpoint\" points=\"" +
             points_attr(canvas, poly.vertices) + "\"/>\n";
    }
  }

  out += "</svg>\n";
  return out;
}

std::string path_spec_svg(const InfinitePathSpec& spec,
                          const RenderOptions& opts) {
  check_options(opts);
  PathWord word = materialize(spec, 4, 4);
  std::vector<Vertex> verts = trace_vertices(word);

  Canvas canvas;
  canvas.scale = opts.scale;
  canvas.margin = 0.25 * opts.scale;
  std::vector<Vec2> pts;
  pts.reserve(verts.size());
  for (const Vertex& v : verts) {
    Vec2 p = vertex_position(v);
    canvas.include(p);
    pts.push_back(p);
  }

  std::string out = document_open(canvas);
  out += "<polyline class=\"path\" points=\"" + points_attr(canvas, pts) +
         "\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace hexperim
