#pragma once
// Minimal exterior perimeter of n-cell clusters and the spiral construction
// that attains it for every n.

#include <cstdint>
#include <vector>

#include "hexperim/cluster.hpp"

namespace hexperim {

// 3m^2 - 3m + 1: the sizes (1, 7, 19, 37, ...) at which a regular hexagonal
// cluster of m rings exists
std::int64_t centered_hexagonal_number(std::int64_t m);

// sqrt(48n - 12), the isoperimetric lower bound for the exterior perimeter
double exterior_perimeter_lower_bound(std::int64_t n);

// Minimum exterior edge count over all n-cell clusters: 2 * ceil(sqrt(12n-3)).
// Computed with integer square roots; no floating point is involved.
std::int64_t min_exterior_perimeter(std::int64_t n);

// floor(sqrt(x)) for non-negative x
std::uint64_t isqrt(std::uint64_t x);
// smallest k with k*k >= x
std::uint64_t ceil_sqrt(std::uint64_t x);

// First n cells of the deterministic spiral: cell (0,0), then concentric
// counterclockwise rings; ring m starts at (m, -1), flush against a corner
// cell of the finished hexagon, so every prefix attains the minimal exterior
// perimeter.  spiral_cells(n) is a prefix of spiral_cells(n+1).
std::vector<CellCoord> spiral_cells(std::int64_t n);
Cluster spiral_cluster(std::int64_t n);

// true iff the minimal exterior perimeter lies strictly within 2 of the
// isoperimetric lower bound (it always does; exposed as a checkable claim)
bool exterior_perimeter_near_bound(std::int64_t n);

// Band for the minimal *total* perimeter p = 3n + t/2:
//   3n + sqrt(12 n) - 1 < p < 3n + sqrt(12 n) + 1
struct PerimeterBand {
  double p = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool ok = false;
};

PerimeterBand total_perimeter_band(std::int64_t n);

// Algebraic margin behind ring-by-ring optimality: for every ring count
// m in 1..m_max and every k in 1..5, 36 - k^2 < 24 (6 - k) m.
bool spiral_growth_margin_check(std::int64_t m_max);

}  // namespace hexperim
