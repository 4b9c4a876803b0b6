#include "hexperim/honeycomb.hpp"

#include <cmath>

namespace hexperim {

std::int64_t centered_hexagonal_number(std::int64_t m) {
  if (m < 1) throw validation_error("ring count must be positive");
  return 3 * m * (m - 1) + 1;
}

double exterior_perimeter_lower_bound(std::int64_t n) {
  if (n < 1) throw validation_error("cluster size must be positive");
  return std::sqrt(48.0 * static_cast<double>(n) - 12.0);
}

std::uint64_t isqrt(std::uint64_t x) {
  if (x == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  // the floating point seed can be off by one in either direction
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::uint64_t ceil_sqrt(std::uint64_t x) {
  std::uint64_t r = isqrt(x);
  return r * r == x ? r : r + 1;
}

std::int64_t min_exterior_perimeter(std::int64_t n) {
  if (n < 1) throw validation_error("cluster size must be positive");
  return 2 * static_cast<std::int64_t>(ceil_sqrt(static_cast<std::uint64_t>(12 * n - 3)));
}

namespace {

// Cells of ring m in spiral order.  Ring m >= 2 starts at (m, -1), flush
// against the corner cell (m-1, 0) of the finished hexagon, takes one NE step
// starts just past the corner (m, -m) and walks the six sides
// counterclockwise, finishing on that corner.  The start cell leans against
// the previous ring (two finished neighbors, +2 edges), each corner adds +2
// exactly where the ceiling in the perimeter formula ticks up (m cells
// apart), and the closing corner touches start, previous cell and the inner
// ring at once (+0) — so every prefix stays at the minimal exterior
// perimeter.
std::vector<CellCoord> ring_cells(int m) {
  std::vector<CellCoord> out;
  out.reserve(6 * static_cast<std::size_t>(m));
  CellCoord c{m, -m + 1};
  auto run = [&](int dir, int count) {
    for (int i = 0; i < count; ++i) {
      out.push_back(c);
      c = c + kNeighborStep[dir];
    }
  };
  run(1, m - 1);  // NE side, up to just below the corner (m, 0)
  run(2, m);      // corner (m, 0), then the NW side
  run(3, m);      // corner (0, m), W side
  run(4, m);      // corner (-m, m), SW side
  run(5, m);      // corner (-m, 0), SE side
  run(0, m);      // corner (0, -m), E side
  run(1, 1);      // the closing corner (m, -m), flush against the start
  return out;
}

}  // namespace

std::vector<CellCoord> spiral_cells(std::int64_t n) {
  if (n < 1) throw validation_error("cluster size must be positive");
  std::vector<CellCoord> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back({0, 0});
  for (int m = 1; static_cast<std::int64_t>(out.size()) < n; ++m)
    for (CellCoord c : ring_cells(m)) {
      if (static_cast<std::int64_t>(out.size()) >= n) break;
      out.push_back(c);
    }
  return out;
}

Cluster spiral_cluster(std::int64_t n) { return Cluster(spiral_cells(n)); }

bool exterior_perimeter_near_bound(std::int64_t n) {
  double t = static_cast<double>(min_exterior_perimeter(n));
  return t < exterior_perimeter_lower_bound(n) + 2.0;
}

PerimeterBand total_perimeter_band(std::int64_t n) {
  PerimeterBand band;
  double root = std::sqrt(12.0 * static_cast<double>(n));
  band.p = 3.0 * static_cast<double>(n) +
           0.5 * static_cast<double>(min_exterior_perimeter(n));
  band.lower = 3.0 * static_cast<double>(n) + root - 1.0;
  band.upper = 3.0 * static_cast<double>(n) + root + 1.0;
  band.ok = band.lower < band.p && band.p < band.upper;
  return band;
}

bool spiral_growth_margin_check(std::int64_t m_max) {
  for (std::int64_t m = 1; m <= m_max; ++m)
    for (std::int64_t k = 1; k <= 5; ++k)
      if (36 - k * k >= 24 * (6 - k) * m) return false;
  return true;
}

}  // namespace hexperim
