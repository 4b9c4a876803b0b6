#include "hexperim/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "hexperim/cluster.hpp"

namespace hexperim {

namespace {

const double kSqrt3 = std::sqrt(3.0);

// 2x2 integer matrices acting on axial cell coordinates, row-major.
struct Mat2 {
  int m00, m01, m10, m11;

  CellCoord apply(CellCoord c) const {
    return {m00 * c.q + m01 * c.r, m10 * c.q + m11 * c.r};
  }
  Mat2 operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }
};

constexpr Mat2 kIdentity{1, 0, 0, 1};
// counterclockwise rotation by 60 degrees: (q, r) -> (-r, q + r)
constexpr Mat2 kRot60{0, -1, 1, 1};
// reflection across the x axis: (q, r) -> (q + r, -r)
constexpr Mat2 kMirrorX{1, 1, 0, -1};

// cell matrices of the twelve point-group elements, index = rot + 6*reflect
const std::array<Mat2, 12>& point_matrices() {
  static const std::array<Mat2, 12> mats = [] {
    std::array<Mat2, 12> out{};
    Mat2 r = kIdentity;
    for (int i = 0; i < 6; ++i) {
      out[i] = r;
      out[6 + i] = r * kMirrorX;
      r = kRot60 * r;
    }
    return out;
  }();
  return mats;
}

Vertex rotate60(Vertex v) {
  // derived from the Cartesian rotation of the class base points:
  //   A(a,b) -> B(-b, a+b),  B(a,b) -> A(-1-b, 1+a+b)
  if (v.cls == VertexClass::A) return {VertexClass::B, -v.b, v.a + v.b};
  return {VertexClass::A, -1 - v.b, 1 + v.a + v.b};
}

Vertex mirror_x(Vertex v) {
  // A(a,b) -> B(a+b, -b) and vice versa; classes swap because the x axis
  // reflection turns upward vertical edges into downward ones
  VertexClass c = v.cls == VertexClass::A ? VertexClass::B : VertexClass::A;
  return {c, v.a + v.b, -v.b};
}

}  // namespace

std::array<CellCoord, 6> neighbors(CellCoord c) {
  std::array<CellCoord, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = c + kNeighborStep[i];
  return out;
}

bool adjacent(CellCoord a, CellCoord b) {
  CellCoord d = b - a;
  for (CellCoord s : kNeighborStep)
    if (d == s) return true;
  return false;
}

Vec2 cell_center(CellCoord c) {
  return {kSqrt3 * (c.q + 0.5 * c.r), 1.5 * c.r};
}

Vec2 edge_vector(int label) {
  static const double h = kSqrt3 / 2.0;
  switch (label) {
    case 1: return {0.0, 1.0};
    case 2: return {-h, 0.5};
    case 3: return {-h, -0.5};
    case 4: return {0.0, -1.0};
    case 5: return {h, -0.5};
    case 6: return {h, 0.5};
    default: throw validation_error("edge label must be in 1..6");
  }
}

Vec2 EdgeDirection::unit_vector() const { return edge_vector(label); }

Vertex step(Vertex tail, int label) {
  if (label < 1 || label > 6) throw validation_error("edge label must be in 1..6");
  if (!label_leaves(tail.cls, label))
    throw validation_error("edge label parity does not match vertex class");
  int a = tail.a, b = tail.b;
  switch (label) {
    case 1: return {VertexClass::B, a, b};
    case 3: return {VertexClass::B, a, b - 1};
    case 5: return {VertexClass::B, a + 1, b - 1};
    case 2: return {VertexClass::A, a - 1, b + 1};
    case 4: return {VertexClass::A, a, b};
    default: return {VertexClass::A, a, b + 1};  // 6
  }
}

Vertex unstep(Vertex head, int label) { return step(head, opposite_label(label)); }

CellCoord left_cell(Vertex tail, int label) {
  if (!label_leaves(tail.cls, label))
    throw validation_error("edge label parity does not match vertex class");
  int a = tail.a, b = tail.b;
  switch (label) {
    case 1: return {a, b};
    case 3: return {a + 1, b - 1};
    case 5: return {a + 1, b};
    case 2: return {a, b};
    case 4: return {a + 1, b};
    default: return {a, b + 1};  // 6
  }
}

CellCoord right_cell(Vertex tail, int label) {
  if (!label_leaves(tail.cls, label))
    throw validation_error("edge label parity does not match vertex class");
  int a = tail.a, b = tail.b;
  switch (label) {
    case 1: return {a + 1, b};
    case 3: return {a, b};
    case 5: return {a + 1, b - 1};
    case 2: return {a, b + 1};
    case 4: return {a, b};
    default: return {a + 1, b};  // 6
  }
}

Vertex boundary_edge_tail(CellCoord cell, int dir) {
  int q = cell.q, r = cell.r;
  switch (dir) {
    case 0: return {VertexClass::A, q, r};
    case 1: return {VertexClass::B, q, r};
    case 2: return {VertexClass::A, q - 1, r + 1};
    case 3: return {VertexClass::B, q - 1, r};
    case 4: return {VertexClass::A, q - 1, r};
    case 5: return {VertexClass::B, q, r - 1};
    default: throw validation_error("neighbor direction must be in 0..5");
  }
}

std::pair<std::int64_t, std::int64_t> vertex_scaled_position(Vertex v) {
  std::int64_t x = 2LL * v.a + v.b + 1;
  std::int64_t y = 3LL * v.b + (v.cls == VertexClass::A ? -1 : 1);
  return {x, y};
}

Vec2 vertex_position(Vertex v) {
  auto [x, y] = vertex_scaled_position(v);
  return {0.5 * kSqrt3 * static_cast<double>(x), 0.5 * static_cast<double>(y)};
}

std::vector<Vertex> trace_vertices(const PathWord& w) {
  std::vector<Vertex> out;
  out.reserve(w.labels.size() + 1);
  out.push_back(w.start);
  Vertex v = w.start;
  for (int label : w.labels) {
    v = step(v, label);
    out.push_back(v);
  }
  return out;
}

Vertex path_end(const PathWord& w) {
  Vertex v = w.start;
  for (int label : w.labels) v = step(v, label);
  return v;
}

CellCoord Isometry::apply(CellCoord c) const {
  const Mat2& m = point_matrices()[rot + (reflect ? 6 : 0)];
  return m.apply(c) + shift;
}

Vertex Isometry::apply(Vertex v) const {
  if (reflect) v = mirror_x(v);
  for (int i = 0; i < rot; ++i) v = rotate60(v);
  return {v.cls, v.a + shift.q, v.b + shift.r};
}

int Isometry::apply_label(int label) const {
  if (label < 1 || label > 6) throw validation_error("edge label must be in 1..6");
  // x-axis reflection sends label k to 5-k (mod 6, labels kept in 1..6)
  if (reflect) label = ((4 - label) % 6 + 6) % 6;  // 0-based after this line
  else label -= 1;
  return (label + rot) % 6 + 1;
}

const std::array<Isometry, 12>& Isometry::point_group() {
  static const std::array<Isometry, 12> ops = [] {
    std::array<Isometry, 12> out{};
    for (int f = 0; f < 2; ++f)
      for (int r = 0; r < 6; ++r) out[f * 6 + r] = Isometry{r, f == 1, {0, 0}};
    return out;
  }();
  return ops;
}

std::vector<CellCoord> canonical_cells(std::vector<CellCoord> cells) {
  if (cells.empty()) throw validation_error("canonical form of an empty cluster");
  std::vector<CellCoord> best;
  std::vector<CellCoord> img(cells.size());
  for (const Mat2& m : point_matrices()) {
    for (std::size_t i = 0; i < cells.size(); ++i) img[i] = m.apply(cells[i]);
    std::sort(img.begin(), img.end());
    CellCoord origin = img.front();
    for (CellCoord& c : img) c = c - origin;
    if (best.empty() || std::lexicographical_compare(img.begin(), img.end(),
                                                     best.begin(), best.end()))
      best = img;
  }
  return best;
}

Cluster apply_isometry(const Cluster& c, const Isometry& g) {
  std::vector<CellCoord> out;
  out.reserve(c.size());
  for (CellCoord cell : c.cells()) out.push_back(g.apply(cell));
  return Cluster(std::move(out));
}

Cluster canonical_form(const Cluster& c) {
  return Cluster(canonical_cells(c.cells()));
}

}  // namespace hexperim
