#pragma once

// Edge-word calculus on the honeycomb: validation of finite walks, signed
// label counts, area measured between reroutes, area-shifting surgery on
// two-ended infinite boundary paths, and the minimality classifier.
//
// Infinite paths are represented finitely: a two-label period repeated
// leftward, a finite core word, and a two-label period repeated rightward.
// Every path of interest here is eventually a periodic zigzag on both ends,
// so this loses nothing.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hexperim/lattice.hpp"

namespace hexperim {

// true iff labels are in 1..6 and leave vertices of the right class, every
// consecutive pair differs by exactly one mod 6, and no undirected edge is
// traversed twice.  vertex revisits are allowed (a closed hexagon is valid).
bool validate(const PathWord& w);

// (# edges with this label) - (# edges with the opposite label) over the
// half-open slice [a, b) of edge positions; a <= b <= w.length().
// path-independent: any two valid words with the same endpoints agree.
std::int64_t label_distance(const PathWord& w, int label, std::size_t a,
                            std::size_t b);
std::int64_t label_distance(const PathWord& w, int label);

// area of the closed loop (w2 forward, then w1 reversed); the words must
// share start and end vertices.  positive when w2 encloses more area on the
// path's left side than w1.  always an exact multiple of one quarter cell
// area; an integer multiple of the cell area for the reroutes used here.
double signed_area_between(const PathWord& w1, const PathWord& w2);

// ---- infinite two-ended paths --------------------------------------------

struct InfinitePathSpec {
  // period repeated leftward: the labels immediately before the core are
  // ..., left[0], left[1]
  std::array<int, 2> left{1, 2};
  PathWord core;
  // period repeated rightward: the labels immediately after the core are
  // right[0], right[1], ...
  std::array<int, 2> right{1, 2};
};

// finite window: left_periods ray periods, the core, right_periods ray
// periods, anchored so core vertices keep their positions
PathWord materialize(const InfinitePathSpec& spec, int left_periods,
                     int right_periods);

// ray labels legal and alternating, junctions obey the successor rule, the
// core is a valid word, and a window large enough to cover every possible
// collision is vertex-simple
bool validate_spec(const InfinitePathSpec& spec);

enum class PathClass {
  MinimizingUnique,
  MinimizingNonUnique,
  ConditionallyMinimizing,
  NotMinimizing,
};

const char* path_class_name(PathClass c);

struct Classification {
  PathClass cls = PathClass::NotMinimizing;
  std::string detail;
};

// Classification by the direction set of the infinite word (always an arc of
// consecutive labels) and, for three-direction paths, the pattern of
// switches between the two outer labels:
//   - two adjacent labels                          -> MinimizingUnique
//   - three adjacent, 1..3 consecutive switches    -> MinimizingUnique
//   - three adjacent, any other switch pattern     -> MinimizingNonUnique
//   - three adjacent plus a single occurrence of a
//     fourth adjacent label                        -> ConditionallyMinimizing
//     (minimizing iff no three-direction path meets the area constraint;
//     reported, not decided)
//   - anything else                                -> NotMinimizing
Classification classify(const InfinitePathSpec& spec);

// Adds (sign=+1) or removes (sign=-1) exactly k cell areas from the region
// left of the path by shifting a k-period stretch of the right ray sideways
// by one cell column.  Total path length grows by exactly 2 (0 for k=0); ray
// behavior outside a finite window is unchanged.  The stretch is pushed
// outward along the ray until the rerouted window is collision-free; throws
// validation_error if no window works.
InfinitePathSpec shift_area(const InfinitePathSpec& spec, int k, int sign);

// area of b minus area of a (plain units), for specs with identical rays;
// cores are aligned by absorbing ray periods until endpoints coincide
double spec_area_delta(const InfinitePathSpec& a, const InfinitePathSpec& b);

// aligned-window length of b minus length of a
std::int64_t spec_length_delta(const InfinitePathSpec& a,
                               const InfinitePathSpec& b);

struct Exchange {
  InfinitePathSpec improved;
  std::int64_t savings = 0;  // aligned-window length reduction, >= 2
};

// For a NotMinimizing spec: reroutes a finite window through the shortest
// valid replacement word (ties broken lexicographically), restores the
// enclosed area via shift_area when the reroute changed it, and returns a
// strictly shorter equal-area spec.  throws validation_error when called on
// a minimizing spec or when no improvement exists in the window.
Exchange exchange_improvement(const InfinitePathSpec& spec);

}  // namespace hexperim
