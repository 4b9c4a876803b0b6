#pragma once
// Bounds on the minimal total perimeter of n unit-area regions in the plane,
// compared against the honeycomb value 3n + t/2.

#include <cstdint>
#include <string>
#include <vector>

namespace hexperim {

// perimeter of the regular hexagon of unit area, sqrt(8 * sqrt(3))
extern const double kUnitHexagonPerimeter;
// perimeter saved per region when hexagonal walls may bulge into circular
// arcs: 1 - pi / sqrt(12)
extern const double kPerCellSavings;
// conjectured coefficient of sqrt(n) in the planar minimum: pi^1.5 / 12^0.25
extern const double kConjecturedCoefficient;

struct BoundsReport {
  std::int64_t n = 0;
  double lower = 0.0;        // 3n + (sqrt(pi * A0) - 1.5) sqrt(n)
  double upper = 0.0;        // 3n + pi sqrt(n) + 3
  double honeycomb_p = 0.0;  // 3n + t/2 with t the honeycomb minimum
  double cox_estimate = 0.0; // 3n + 3.10 sqrt(n)
  double conjectured = 0.0;  // 3n + (pi^1.5 / 12^0.25) sqrt(n)
  double unit_hexagon_perimeter = 0.0;
};

BoundsReport bounds_report(std::int64_t n);

// The chain justifying the planar upper bound: the guaranteed perimeter
// saving over the honeycomb value satisfies
//   (sqrt(12 n) - 19) (1 - pi/sqrt(12)) > (sqrt(12) - pi) sqrt(n) - 2
// and subtracting it from the honeycomb band still lands below
// 3n + pi sqrt(n) + 3.  Both hold for every n >= 1.
bool savings_chain_check(std::int64_t n);

// The conjectured coefficient relates to the circle the way the honeycomb
// coefficient relates to the hexagon:
//   (pi^1.5 / 12^0.25) / pi == sqrt(4 pi A0) / 6   (exactly)
bool coefficient_ratio_check();

// smallest n at which the planar upper bound drops below the honeycomb band
// upper limit 3n + sqrt(12 n) + 1
std::int64_t plane_upper_crossover();

// the n values reported by the table emitters: every n up to 10^4, then
// log-spaced (factor 1.2) up to and including n_max
std::vector<std::int64_t> bounds_rows(std::int64_t n_max);

// honeycomb band upper limit 3n + sqrt(12 n) + 1, the comparison line used
// by the upper_lt_band flag and the crossover scan
double band_upper_limit(std::int64_t n);

// one CSV row per bounds_rows entry;
// columns: n,lower,honeycomb_p,upper,cox_estimate,conjectured,
//          lower_lt_upper,lower_lt_honeycomb,upper_lt_band,savings_chain
std::string bounds_csv(std::int64_t n_max);

}  // namespace hexperim
