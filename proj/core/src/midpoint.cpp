#include "hexperim/midpoint.hpp"

#include <cmath>
#include <unordered_set>

namespace hexperim {

const double kCellArea = 1.5 * std::sqrt(3.0);

double MidpointPolygon::length() const {
  if (vertices.size() < 2) return 0.0;
  double total = 0.0;
  std::size_t n = vertices.size();
  std::size_t sides = closed ? n : n - 1;
  for (std::size_t i = 0; i < sides; ++i) {
    Vec2 a = vertices[i];
    Vec2 b = vertices[(i + 1) % n];
    total += std::hypot(b.x - a.x, b.y - a.y);
  }
  return total;
}

MidpointPolygon midpoint_polygon(const PathWord& p) {
  if (p.labels.size() < 2)
    throw validation_error("midpoint polygon needs a path of at least two edges");

  std::vector<Vertex> verts = trace_vertices(p);  // throws on parity breaks
  bool closed = verts.front() == verts.back();

  // exact scaled coordinates make the repeated-vertex and repeated-edge
  // checks robust; positions are in units of (sqrt(3)/2, 1/2)
  std::unordered_set<std::uint64_t> seen_vertex;
  std::unordered_set<std::uint64_t> seen_edge;
  auto key = [](std::int64_t x, std::int64_t y) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
           static_cast<std::uint32_t>(y);
  };
  std::size_t last = closed ? verts.size() - 1 : verts.size();
  for (std::size_t i = 0; i < last; ++i) {
    auto [x, y] = vertex_scaled_position(verts[i]);
    if (!seen_vertex.insert(key(x, y)).second)
      throw validation_error("path crosses itself");
  }
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    auto [x1, y1] = vertex_scaled_position(verts[i]);
    auto [x2, y2] = vertex_scaled_position(verts[i + 1]);
    if (!seen_edge.insert(key(x1 + x2, y1 + y2)).second)  // midpoint identifies the edge
      throw validation_error("path repeats an edge");
  }

  MidpointPolygon out;
  out.closed = closed;
  out.vertices.reserve(p.labels.size());
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    Vec2 a = vertex_position(verts[i]);
    Vec2 b = vertex_position(verts[i + 1]);
    out.vertices.push_back({0.5 * (a.x + b.x), 0.5 * (a.y + b.y)});
  }
  return out;
}

double polygon_area(const MidpointPolygon& q) {
  if (!q.closed) throw validation_error("area of an open polygon");
  double twice = 0.0;
  std::size_t n = q.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = q.vertices[i];
    Vec2 b = q.vertices[(i + 1) % n];
    twice += (a.x + b.x) * (a.y - b.y);  // surveyor's form, kinder to cancellation
  }
  return -0.5 * twice;
}

}  // namespace hexperim
