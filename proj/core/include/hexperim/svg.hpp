#pragma once

#include <string>

#include "hexperim/cluster.hpp"
#include "hexperim/infpath.hpp"

namespace hexperim {

// rendering knobs shared by the svg emitters. scale is pixels per lattice
// unit and must be positive.
struct RenderOptions {
  double scale = 40.0;
  bool midpoint_overlay = false;
};

// standalone svg document with one <polygon class="cell"> per cell.
// when midpoint_overlay is set, each boundary component is traced through
// its edge midpoints and drawn on top.
std::string cluster_svg(const Cluster& c, const RenderOptions& opts = {});

// renders a finite window of a two-ended path spec (four ray periods on
// each side of the core) as a polyline.
std::string path_spec_svg(const InfinitePathSpec& spec,
                          const RenderOptions& opts = {});

}  // namespace hexperim
