#include "hexperim/cluster.hpp"

#include <algorithm>
#include <unordered_set>

namespace hexperim {

namespace {

// key for a directed edge: tail vertex plus label
std::uint64_t pack_edge(Vertex v, int label) {
  std::uint64_t a = static_cast<std::uint32_t>(v.a + (1 << 20));
  std::uint64_t b = static_cast<std::uint32_t>(v.b + (1 << 20));
  return (a << 40) | (b << 8) | (static_cast<std::uint64_t>(v.cls == VertexClass::B) << 3) |
         static_cast<std::uint64_t>(label);
}

}  // namespace

Cluster::Cluster(std::vector<CellCoord> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw validation_error("cluster must contain at least one cell");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Cluster::contains(CellCoord c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Perimeters perimeters(const Cluster& c) {
  CellSet set(c.cells());
  Perimeters out;
  out.n = static_cast<std::int64_t>(c.size());
  std::int64_t shared_incidences = 0;
  for (CellCoord cell : c.cells())
    for (CellCoord nb : neighbors(cell))
      if (set.contains(nb)) ++shared_incidences;
  out.s = shared_incidences / 2;
  out.t = 6 * out.n - 2 * out.s;
  out.p = out.s + out.t;
  return out;
}

PathWord boundary_loop(CellCoord cell, int dir, const CellSet& set) {
  if (dir < 0 || dir >= 6) throw validation_error("edge direction out of range");
  if (set.contains(cell + kNeighborStep[dir]))
    throw validation_error("requested edge is interior, not boundary");
  Vertex tail = boundary_edge_tail(cell, dir);
  int label = dir + 1;
  // walk the loop; the cluster stays on the left, and at each head vertex
  // exactly one of the two non-reversing continuations is a boundary edge
  PathWord loop;
  loop.start = tail;
  Vertex v = tail;
  int lab = label;
  do {
    loop.labels.push_back(lab);
    v = step(v, lab);
    int turn_in = prev_label_ccw(lab);
    lab = set.contains(left_cell(v, turn_in)) ? turn_in : next_label_ccw(lab);
  } while (!(v == tail && lab == label));
  return loop;
}

BoundaryPath trace_boundary(const std::vector<CellCoord>& cells, const CellSet& set) {
  BoundaryPath out;
  std::unordered_set<std::uint64_t> visited;
  for (CellCoord cell : cells) {
    for (int dir = 0; dir < 6; ++dir) {
      if (set.contains(cell + kNeighborStep[dir])) continue;
      Vertex tail = boundary_edge_tail(cell, dir);
      int label = dir + 1;
      if (visited.count(pack_edge(tail, label))) continue;
      PathWord loop = boundary_loop(cell, dir, set);
      Vertex v = loop.start;
      for (int lab : loop.labels) {
        visited.insert(pack_edge(v, lab));
        v = step(v, lab);
      }
      out.components.push_back(std::move(loop));
    }
  }
  return out;
}

BoundaryPath boundary_components(const Cluster& c) {
  return trace_boundary(c.cells(), CellSet(c.cells()));
}

Topology topology(const Cluster& c) {
  CellSet set(c.cells());
  // flood fill over cell adjacency
  std::vector<CellCoord> stack{c.cells().front()};
  CellSet seen;
  seen.insert(c.cells().front());
  while (!stack.empty()) {
    CellCoord cur = stack.back();
    stack.pop_back();
    for (CellCoord nb : neighbors(cur))
      if (set.contains(nb) && !seen.contains(nb)) {
        seen.insert(nb);
        stack.push_back(nb);
      }
  }
  Topology out;
  out.connected = seen.size() == c.size();
  if (out.connected)
    out.simply_connected = boundary_components(c).components.size() == 1;
  return out;
}

}  // namespace hexperim
