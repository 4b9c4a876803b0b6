#pragma once
// Integer geometry of the unit-side hexagonal honeycomb.
//
// Conventions used throughout the project:
//   - cells are pointy-top hexagons addressed by axial coordinates (q, r);
//     the center of cell (q, r) sits at (sqrt(3) * (q + r/2), 1.5 * r)
//   - the six neighbor directions in counterclockwise order are
//     E, NE, NW, W, SW, SE  (indices 0..5)
//   - directed edges carry labels 1..6, counterclockwise, starting with the
//     upward vertical direction: label k points at angle 90 + (k-1)*60
//     degrees, so label k+3 is the reverse of label k
//   - the vertex set splits into two classes: class A vertices emit the odd
//     labels (1, 3, 5) and class B vertices the even ones (2, 4, 6); every
//     edge joins an A vertex to a B vertex
//
// All adjacency and incidence decisions are integer arithmetic; floating
// point appears only in Cartesian positions handed to rendering and area
// code.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "hexperim/errors.hpp"

namespace hexperim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct CellCoord {
  int q = 0;
  int r = 0;

  friend bool operator==(CellCoord a, CellCoord b) { return a.q == b.q && a.r == b.r; }
  friend bool operator!=(CellCoord a, CellCoord b) { return !(a == b); }
  // lexicographic by (q, r); used for canonical forms and sorted output
  friend bool operator<(CellCoord a, CellCoord b) {
    return a.q != b.q ? a.q < b.q : a.r < b.r;
  }
  friend CellCoord operator+(CellCoord a, CellCoord b) { return {a.q + b.q, a.r + b.r}; }
  friend CellCoord operator-(CellCoord a, CellCoord b) { return {a.q - b.q, a.r - b.r}; }
};

// neighbor steps in counterclockwise order E, NE, NW, W, SW, SE
inline constexpr std::array<CellCoord, 6> kNeighborStep = {
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

std::array<CellCoord, 6> neighbors(CellCoord c);
bool adjacent(CellCoord a, CellCoord b);

// center of the cell; cells have unit side length
Vec2 cell_center(CellCoord c);

// ---- directed edge labels -------------------------------------------------

// A directed edge class of the honeycomb.  Kept as a tiny value type so the
// label range is checked once at the API boundary; hot loops use raw ints.
struct EdgeDirection {
  int label = 1;  // 1..6

  explicit EdgeDirection(int l) : label(l) {
    if (l < 1 || l > 6) throw validation_error("edge label must be in 1..6");
  }
  Vec2 unit_vector() const;
};

// (cos, sin) of 90 + (label-1)*60 degrees
Vec2 edge_vector(int label);

inline int opposite_label(int label) { return ((label + 2) % 6) + 1; }
inline int next_label_ccw(int label) { return (label % 6) + 1; }
inline int prev_label_ccw(int label) { return ((label + 4) % 6) + 1; }
// successor rule: consecutive labels of a path differ by exactly one, mod 6
inline bool labels_adjacent(int a, int b) {
  int d = (a - b + 6) % 6;
  return d == 1 || d == 5;
}

// ---- vertices -------------------------------------------------------------

enum class VertexClass : std::uint8_t { A = 0, B = 1 };

// Each class forms a triangular lattice under the cell translations:
//   class A: base (sqrt(3)/2, -1/2) + a*T(1,0) + b*T(0,1)
//   class B: base (sqrt(3)/2, +1/2) + ...
// where T(q, r) is the center offset of cell (q, r).
struct Vertex {
  VertexClass cls = VertexClass::A;
  int a = 0;
  int b = 0;

  friend bool operator==(Vertex u, Vertex v) {
    return u.cls == v.cls && u.a == v.a && u.b == v.b;
  }
  friend bool operator!=(Vertex u, Vertex v) { return !(u == v); }
};

// true when `label` may leave a vertex of this class (odd from A, even from B)
inline bool label_leaves(VertexClass cls, int label) {
  return (label % 2 == 1) == (cls == VertexClass::A);
}

// head vertex of the edge `label` leaving `tail`; throws on a parity mismatch
Vertex step(Vertex tail, int label);
// tail vertex of the edge `label` arriving at `head`
Vertex unstep(Vertex head, int label);

// cells incident to the directed edge (tail, label)
CellCoord left_cell(Vertex tail, int label);
CellCoord right_cell(Vertex tail, int label);

// the directed boundary edge of `cell` against its missing neighbor in
// direction `dir` (0..5), oriented so that `cell` lies on the left;
// the edge label is always dir + 1
Vertex boundary_edge_tail(CellCoord cell, int dir);

Vec2 vertex_position(Vertex v);
// exact position in units of (sqrt(3)/2, 1/2): pos = (X*sqrt(3)/2, Y/2)
std::pair<std::int64_t, std::int64_t> vertex_scaled_position(Vertex v);

// ---- edge words -----------------------------------------------------------

// A walk along honeycomb edges: a start vertex plus directed edge labels.
// Valid words obey the successor rule and repeat no (undirected) edge; see
// infpath.hpp for the validator.
struct PathWord {
  Vertex start;
  std::vector<int> labels;

  std::size_t length() const { return labels.size(); }
};

// all vertices visited, in order (labels.size() + 1 entries)
std::vector<Vertex> trace_vertices(const PathWord& w);
// final vertex of the walk
Vertex path_end(const PathWord& w);

// ---- congruences ----------------------------------------------------------

// A symmetry of the honeycomb: an element of the 12-element point group
// about the center of cell (0,0) -- rotation by rot*60 degrees, optionally
// preceded by the reflection across the x axis -- followed by a cell
// translation.
struct Isometry {
  int rot = 0;           // 0..5, counterclockwise
  bool reflect = false;  // x-axis reflection applied first
  CellCoord shift{0, 0};

  CellCoord apply(CellCoord c) const;
  Vertex apply(Vertex v) const;
  int apply_label(int label) const;

  // the twelve point-group elements (shift = 0)
  static const std::array<Isometry, 12>& point_group();
};

class Cluster;  // cluster.hpp

// image of a cluster under an isometry
Cluster apply_isometry(const Cluster& c, const Isometry& g);

// Least representative of the congruence class of C: over all 12 point-group
// images, cells sorted and translated so the lexicographically least cell is
// (0,0); the smallest resulting cell list wins.
Cluster canonical_form(const Cluster& c);

// sorted/translated/compared without constructing Cluster objects
std::vector<CellCoord> canonical_cells(std::vector<CellCoord> cells);

// ---- hashed cell sets -----------------------------------------------------

inline std::uint64_t pack_cell(CellCoord c) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.q)) << 32) |
         static_cast<std::uint32_t>(c.r);
}
inline CellCoord unpack_cell(std::uint64_t k) {
  return {static_cast<std::int32_t>(k >> 32), static_cast<std::int32_t>(k & 0xffffffffu)};
}

struct CellKeyHash {
  std::size_t operator()(std::uint64_t k) const {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

// Unordered membership structure used by boundary tracing and enumeration.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(const std::vector<CellCoord>& cells) {
    set_.reserve(cells.size() * 2);
    for (CellCoord c : cells) set_.insert(pack_cell(c));
  }
  void insert(CellCoord c) { set_.insert(pack_cell(c)); }
  void erase(CellCoord c) { set_.erase(pack_cell(c)); }
  bool contains(CellCoord c) const { return set_.count(pack_cell(c)) != 0; }
  std::size_t size() const { return set_.size(); }
  void reserve(std::size_t n) { set_.reserve(n); }
  std::vector<CellCoord> cells() const {
    std::vector<CellCoord> out;
    out.reserve(set_.size());
    for (std::uint64_t k : set_) out.push_back(unpack_cell(k));
    return out;
  }

 private:
  std::unordered_set<std::uint64_t, CellKeyHash> set_;
};

}  // namespace hexperim
