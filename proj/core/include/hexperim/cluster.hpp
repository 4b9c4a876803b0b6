#pragma once
// Finite cell sets, their perimeter quantities and boundary structure.

#include <cstdint>
#include <vector>

#include "hexperim/lattice.hpp"

namespace hexperim {

// A finite, nonempty set of distinct cells.  May be disconnected and may
// enclose holes; cells are kept sorted.
class Cluster {
 public:
  explicit Cluster(std::vector<CellCoord> cells);

  const std::vector<CellCoord>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(CellCoord c) const;

  friend bool operator==(const Cluster& a, const Cluster& b) {
    return a.cells_ == b.cells_;
  }
  friend bool operator<(const Cluster& a, const Cluster& b) {
    return a.cells_ < b.cells_;
  }

 private:
  std::vector<CellCoord> cells_;
};

struct Perimeters {
  std::int64_t n = 0;  // cells
  std::int64_t s = 0;  // interior edges (shared by two cells)
  std::int64_t t = 0;  // exterior edges
  std::int64_t p = 0;  // total edges, s + t
};

// Counts cells, interior and exterior edges.  Always satisfies 6n = 2s + t.
Perimeters perimeters(const Cluster& c);

// Closed boundary loops of the cluster, each traversed with the cluster on
// the left.  A loop never revisits a vertex (two cells that share a vertex
// also share an edge), so each component is a simple closed curve.
struct BoundaryPath {
  std::vector<PathWord> components;

  std::size_t total_edges() const {
    std::size_t t = 0;
    for (const PathWord& w : components) t += w.length();
    return t;
  }
};

BoundaryPath boundary_components(const Cluster& c);

// Same, against a membership set; `cells` must list the members of `set`.
BoundaryPath trace_boundary(const std::vector<CellCoord>& cells, const CellSet& set);

// Traces the single loop through the exterior edge of `cell` facing
// direction `dir` (0..5).  Throws if that neighbor is occupied.  Useful for
// following one known boundary component without scanning every cell.
PathWord boundary_loop(CellCoord cell, int dir, const CellSet& set);

struct Topology {
  bool connected = false;
  bool simply_connected = false;  // connected with a single boundary loop
};

Topology topology(const Cluster& c);

}  // namespace hexperim
