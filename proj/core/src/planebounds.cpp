#include "hexperim/planebounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "hexperim/errors.hpp"
#include "hexperim/honeycomb.hpp"
#include "hexperim/midpoint.hpp"

namespace hexperim {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt12 = std::sqrt(12.0);
}  // namespace

const double kUnitHexagonPerimeter = std::sqrt(8.0 * std::sqrt(3.0));
const double kPerCellSavings = 1.0 - kPi / kSqrt12;
const double kConjecturedCoefficient = std::pow(kPi, 1.5) / std::pow(12.0, 0.25);

BoundsReport bounds_report(std::int64_t n) {
  if (n < 1) throw validation_error("region count must be positive");
  BoundsReport rep;
  rep.n = n;
  double nn = static_cast<double>(n);
  double root = std::sqrt(nn);
  rep.lower = 3.0 * nn + (std::sqrt(kPi * kCellArea) - 1.5) * root;
  rep.upper = 3.0 * nn + kPi * root + 3.0;
  rep.honeycomb_p = 3.0 * nn + 0.5 * static_cast<double>(min_exterior_perimeter(n));
  rep.cox_estimate = 3.0 * nn + 3.10 * root;
  rep.conjectured = 3.0 * nn + kConjecturedCoefficient * root;
  rep.unit_hexagon_perimeter = kUnitHexagonPerimeter;
  return rep;
}

bool savings_chain_check(std::int64_t n) {
  if (n < 1) throw validation_error("region count must be positive");
  double nn = static_cast<double>(n);
  double guaranteed = (std::sqrt(12.0 * nn) - 19.0) * kPerCellSavings;
  bool link1 = guaranteed > (kSqrt12 - kPi) * std::sqrt(nn) - 2.0;
  double band_upper = 3.0 * nn + std::sqrt(12.0 * nn) + 1.0;
  bool link2 = band_upper - guaranteed < 3.0 * nn + kPi * std::sqrt(nn) + 3.0;
  return link1 && link2;
}

bool coefficient_ratio_check() {
  double lhs = kConjecturedCoefficient / kPi;
  double rhs = std::sqrt(4.0 * kPi * kCellArea) / 6.0;
  return std::fabs(lhs - rhs) <= 1e-12;
}

double band_upper_limit(std::int64_t n) {
  double nn = static_cast<double>(n);
  return 3.0 * nn + std::sqrt(12.0 * nn) + 1.0;
}

std::int64_t plane_upper_crossover() {
  for (std::int64_t n = 1;; ++n)
    if (bounds_report(n).upper < band_upper_limit(n)) return n;
}

std::vector<std::int64_t> bounds_rows(std::int64_t n_max) {
  if (n_max < 1) throw validation_error("region count must be positive");
  std::vector<std::int64_t> rows;
  std::int64_t n = 1;
  for (;;) {
    rows.push_back(n);
    if (n == n_max) break;
    std::int64_t next = n < 10000 ? n + 1 : n + std::max<std::int64_t>(1, n / 5);
    n = std::min(next, n_max);
  }
  return rows;
}

std::string bounds_csv(std::int64_t n_max) {
  std::string out =
      "n,lower,honeycomb_p,upper,cox_estimate,conjectured,"
      "lower_lt_upper,lower_lt_honeycomb,upper_lt_band,savings_chain\n";
  char line[256];
  for (std::int64_t n : bounds_rows(n_max)) {
    BoundsReport rep = bounds_report(n);
    std::snprintf(line, sizeof(line), "%lld,%.9g,%.9g,%.9g,%.9g,%.9g,%d,%d,%d,%d\n",
                  static_cast<long long>(n), rep.lower, rep.honeycomb_p, rep.upper,
                  rep.cox_estimate, rep.conjectured, rep.lower < rep.upper ? 1 : 0,
                  rep.lower < rep.honeycomb_p ? 1 : 0,
                  rep.upper < band_upper_limit(n) ? 1 : 0,
                  savings_chain_check(n) ? 1 : 0);
    out += line;
  }
  return out;
}

}  // namespace hexperim
