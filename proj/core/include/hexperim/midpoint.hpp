#pragma once
// Midpoint transform of edge words: joining midpoints of consecutive edges
// turns a honeycomb path into a polygon whose sides all have length
// sqrt(3)/2 and directions at multiples of 60 degrees.

#include <vector>

#include "hexperim/lattice.hpp"

namespace hexperim {

// area of one honeycomb cell, 3*sqrt(3)/2
extern const double kCellArea;

struct MidpointPolygon {
  std::vector<Vec2> vertices;  // midpoints, in path order
  bool closed = false;

  // total side length; a closed polygon of L midpoints has L sides, an open
  // one L-1
  double length() const;
};

// Midpoints of the edges of P, in order.  P must have at least two edges,
// repeat no edge, and revisit no vertex except that the walk may return to
// its start (which closes the polygon).
MidpointPolygon midpoint_polygon(const PathWord& p);

// signed area by the surveyor's formula; positive for counterclockwise
// traversal; the polygon must be closed
double polygon_area(const MidpointPolygon& q);

}  // namespace hexperim
