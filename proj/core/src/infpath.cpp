#include "hexperim/infpath.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <unordered_set>
#include <utility>

#include "hexperim/errors.hpp"
#include "hexperim/midpoint.hpp"

namespace hexperim {

namespace {

// scaled-coordinate displacement of one edge, in units of (sqrt(3)/2, 1/2)
std::pair<int, int> label_delta(int label) {
  static constexpr std::pair<int, int> kDelta[6] = {
      {0, 2}, {-1, 1}, {-1, -1}, {0, -2}, {1, -1}, {1, 1}};
  return kDelta[label - 1];
}

std::uint64_t pack_xy(std::int64_t x, std::int64_t y) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(
              static_cast<std::int32_t>(x)))
          << 32) |
         static_cast<std::uint32_t>(static_cast<std::int32_t>(y));
}

std::uint64_t vertex_key(Vertex v) {
  auto [x, y] = vertex_scaled_position(v);
  return pack_xy(x, y);
}

// doubled midpoint of the undirected edge (tail, label)
std::uint64_t edge_key(Vertex tail, int label) {
  auto [x, y] = vertex_scaled_position(tail);
  auto [dx, dy] = label_delta(label);
  return pack_xy(2 * x + dx, 2 * y + dy);
}

}  // namespace

bool validate(const PathWord& w) {
  Vertex v = w.start;
  std::unordered_set<std::uint64_t> edges;
  edges.reserve(w.labels.size() * 2 + 1);
  int prev = 0;
  for (int lab : w.labels) {
    if (lab < 1 || lab > 6) return false;
    if (!label_leaves(v.cls, lab)) return false;
    if (prev != 0 && !labels_adjacent(prev, lab)) return false;
    if (!edges.insert(edge_key(v, lab)).second) return false;
    v = step(v, lab);
    prev = lab;
  }
  return true;
}

std::int64_t label_distance(const PathWord& w, int label, std::size_t a,
                            std::size_t b) {
  if (label < 1 || label > 6) throw validation_error("edge label must be in 1..6");
  if (a > b || b > w.labels.size())
    throw validation_error("label slice out of range");
  int opp = opposite_label(label);
  std::int64_t d = 0;
  for (std::size_t i = a; i < b; ++i) {
    if (w.labels[i] == label) ++d;
    else if (w.labels[i] == opp) --d;
  }
  return d;
}

std::int64_t label_distance(const PathWord& w, int label) {
  return label_distance(w, label, 0, w.labels.size());
}

double signed_area_between(const PathWord& w1, const PathWord& w2) {
  if (!(w1.start == w2.start) || !(path_end(w1) == path_end(w2)))
    throw validation_error("words must share both endpoints");
  std::vector<std::pair<std::int64_t, std::int64_t>> loop;
  loop.reserve(w1.labels.size() + w2.labels.size() + 2);
  std::vector<Vertex> fwd = trace_vertices(w2);
  std::vector<Vertex> rev = trace_vertices(w1);
  for (const Vertex& v : fwd) loop.push_back(vertex_scaled_position(v));
  for (std::size_t i = rev.size() - 1; i > 0; --i)
    loop.push_back(vertex_scaled_position(rev[i - 1]));
  std::int64_t shoelace = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    std::size_t j = (i + 1) % loop.size();
    shoelace += loop[i].first * loop[j].second - loop[j].first * loop[i].second;
  }
  // scaled-coordinate shoelace of 12 corresponds to one cell area
  return static_cast<double>(shoelace) * (std::sqrt(3.0) / 8.0);
}

PathWord materialize(const InfinitePathSpec& spec, int left_periods,
                     int right_periods) {
  if (left_periods < 0 || right_periods < 0)
    throw validation_error("period counts must be nonnegative");
  PathWord out;
  Vertex s = spec.core.start;
  for (int p = 0; p < left_periods; ++p) {
    s = unstep(s, spec.left[1]);
    s = unstep(s, spec.left[0]);
  }
  out.start = s;
  out.labels.reserve(2 * static_cast<std::size_t>(left_periods + right_periods) +
                     spec.core.labels.size());
  for (int p = 0; p < left_periods; ++p) {
    out.labels.push_back(spec.left[0]);
    out.labels.push_back(spec.left[1]);
  }
  out.labels.insert(out.labels.end(), spec.core.labels.begin(),
                    spec.core.labels.end());
  for (int p = 0; p < right_periods; ++p) {
    out.labels.push_back(spec.right[0]);
    out.labels.push_back(spec.right[1]);
  }
  return out;
}

bool validate_spec(const InfinitePathSpec& spec) {
  for (int l : {spec.left[0], spec.left[1], spec.right[0], spec.right[1]})
    if (l < 1 || l > 6) return false;
  if (!labels_adjacent(spec.left[0], spec.left[1]) ||
      !labels_adjacent(spec.right[0], spec.right[1]))
    return false;
  // Beyond the checked window the tails are straight periodic zigzags whose
  // distance from every window vertex grows monotonically, so a window this
  // much larger than the core covers every possible collision.
  int window = static_cast<int>(spec.core.labels.size()) + 16;
  PathWord w;
  try {
    w = materialize(spec, window, window);
  } catch (const validation_error&) {
    return false;  // junction parity mismatch
  }
  if (!validate(w)) return false;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(w.labels.size() * 2 + 2);
  Vertex v = w.start;
  if (!seen.insert(vertex_key(v)).second) return false;
  for (int lab : w.labels) {
    v = step(v, lab);
    if (!seen.insert(vertex_key(v)).second) return false;
  }
  return true;
}

const char* path_class_name(PathClass c) {
  switch (c) {
    case PathClass::MinimizingUnique: return "MinimizingUnique";
    case PathClass::MinimizingNonUnique: return "MinimizingNonUnique";
    case PathClass::ConditionallyMinimizing: return "ConditionallyMinimizing";
    case PathClass::NotMinimizing: return "NotMinimizing";
  }
  return "NotMinimizing";
}

Classification classify(const InfinitePathSpec& spec) {
  if (!validate_spec(spec))
    throw validation_error("invalid or non-simple path spec");
  std::array<int, 7> core_count{};
  std::array<bool, 7> in_ray{};
  in_ray[spec.left[0]] = in_ray[spec.left[1]] = true;
  in_ray[spec.right[0]] = in_ray[spec.right[1]] = true;
  for (int l : spec.core.labels) ++core_count[l];
  std::array<bool, 7> present{};
  for (int l = 1; l <= 6; ++l) present[l] = in_ray[l] || core_count[l] > 0;

  // the labels of a valid word always cover an arc of consecutive labels
  // (each step moves one position around the six-cycle); find the least arc
  int arc_start = 1;
  int arc_len = 7;
  for (int len = 2; len <= 6 && arc_len == 7; ++len) {
    for (int s = 1; s <= 6; ++s) {
      bool ok = true;
      for (int l = 1; l <= 6 && ok; ++l)
        if (present[l] && ((l - s) % 6 + 6) % 6 >= len) ok = false;
      if (ok) {
        arc_start = s;
        arc_len = len;
        break;
      }
    }
  }

  if (arc_len == 2)
    return {PathClass::MinimizingUnique, "two adjacent directions (halfplane)"};

  if (arc_len == 3) {
    // rotate the arc onto {1,2,3}; the middle label 2 alternates with the
    // outer labels, so the outer subsequence is the switch pattern
    int r = ((1 - arc_start) % 6 + 6) % 6;
    PathWord win = materialize(spec, 4, 4);
    std::vector<int> outer;
    for (int l : win.labels) {
      int m = ((l - 1 + r) % 6) + 1;
      if (m != 2) outer.push_back(m);
    }
    std::vector<std::size_t> switches;
    for (std::size_t i = 0; i + 1 < outer.size(); ++i)
      if (outer[i] != outer[i + 1]) switches.push_back(i);
    bool consecutive = true;
    for (std::size_t i = 0; i + 1 < switches.size(); ++i)
      if (switches[i + 1] != switches[i] + 1) consecutive = false;
    std::size_t c = switches.size();
    if (c >= 1 && c <= 3 && consecutive)
      return {PathClass::MinimizingUnique,
              "three adjacent directions with " + std::to_string(c) +
                  " consecutive switches"};
    return {PathClass::MinimizingNonUnique,
            "three adjacent directions with a non-rigid switch pattern (" +
                std::to_string(c) + " switches)"};
  }

  if (arc_len == 4) {
    int low = arc_start;
    int high = ((arc_start + 2) % 6) + 1;
    auto single_use = [&](int l) { return !in_ray[l] && core_count[l] == 1; };
    if (single_use(low) || single_use(high))
      return {PathClass::ConditionallyMinimizing,
              "three adjacent directions plus one occurrence of a fourth; "
              "minimizing iff no three-direction path meets the area "
              "constraint"};
    return {PathClass::NotMinimizing,
            "four directions with a repeated extreme label"};
  }
  return {PathClass::NotMinimizing,
          "direction set spans " + std::to_string(arc_len) + " labels"};
}

namespace {

InfinitePathSpec rotate_spec(const InfinitePathSpec& spec, int rot) {
  Isometry g;
  g.rot = ((rot % 6) + 6) % 6;
  InfinitePathSpec out;
  out.left = {g.apply_label(spec.left[0]), g.apply_label(spec.left[1])};
  out.right = {g.apply_label(spec.right[0]), g.apply_label(spec.right[1])};
  out.core.start = g.apply(spec.core.start);
  out.core.labels.reserve(spec.core.labels.size());
  for (int l : spec.core.labels) out.core.labels.push_back(g.apply_label(l));
  return out;
}

void extend_left_in_place(InfinitePathSpec& s, int periods) {
  for (int p = 0; p < periods; ++p) {
    s.core.labels.insert(s.core.labels.begin(), {s.left[0], s.left[1]});
    s.core.start = unstep(unstep(s.core.start, s.left[1]), s.left[0]);
  }
}

void extend_right_in_place(InfinitePathSpec& s, int periods) {
  for (int p = 0; p < periods; ++p) {
    s.core.labels.push_back(s.right[0]);
    s.core.labels.push_back(s.right[1]);
  }
}

std::pair<std::int64_t, std::int64_t> period_delta(int l0, int l1) {
  auto [ax, ay] = label_delta(l0);
  auto [bx, by] = label_delta(l1);
  return {ax + bx, ay + by};
}

// absorb ray periods into the cores until both specs share core endpoints
void align_specs(InfinitePathSpec& a, InfinitePathSpec& b) {
  if (a.left != b.left || a.right != b.right)
    throw validation_error("specs do not share ray periods");
  auto [px, py] = period_delta(a.left[0], a.left[1]);
  for (int guard = 0; !(a.core.start == b.core.start); ++guard) {
    if (guard > 512) throw validation_error("specs do not share the left ray");
    auto [ax, ay] = vertex_scaled_position(a.core.start);
    auto [bx, by] = vertex_scaled_position(b.core.start);
    std::int64_t pa = ax * px + ay * py;
    std::int64_t pb = bx * px + by * py;
    if (pa == pb) throw validation_error("specs do not share the left ray");
    extend_left_in_place(pa > pb ? a : b, 1);
  }
  auto [qx, qy] = period_delta(a.right[0], a.right[1]);
  for (int guard = 0; !(path_end(a.core) == path_end(b.core)); ++guard) {
    if (guard > 512) throw validation_error("specs do not share the right ray");
    auto [ax, ay] = vertex_scaled_position(path_end(a.core));
    auto [bx, by] = vertex_scaled_position(path_end(b.core));
    std::int64_t pa = ax * qx + ay * qy;
    std::int64_t pb = bx * qx + by * qy;
    if (pa == pb) throw validation_error("specs do not share the right ray");
    extend_right_in_place(pa < pb ? a : b, 1);
  }
}

}  // namespace

double spec_area_delta(const InfinitePathSpec& a, const InfinitePathSpec& b) {
  InfinitePathSpec ca = a;
  InfinitePathSpec cb = b;
  align_specs(ca, cb);
  return signed_area_between(ca.core, cb.core);
}

std::int64_t spec_length_delta(const InfinitePathSpec& a,
                               const InfinitePathSpec& b) {
  InfinitePathSpec ca = a;
  InfinitePathSpec cb = b;
  align_specs(ca, cb);
  return static_cast<std::int64_t>(cb.core.length()) -
         static_cast<std::int64_t>(ca.core.length());
}

InfinitePathSpec shift_area(const InfinitePathSpec& spec, int k, int sign) {
  if (sign != 1 && sign != -1) throw validation_error("sign must be +1 or -1");
  if (k < 0) throw validation_error("cell count must be nonnegative");
  if (!validate_spec(spec)) throw validation_error("invalid path spec");
  if (k == 0) return spec;
  // rotate so the right ray runs over labels {1, 2}
  int a = spec.right[0];
  int b = spec.right[1];
  int rot = (b == next_label_ccw(a)) ? 1 - a : 1 - b;
  InfinitePathSpec frame = rotate_spec(spec, rot);
  // In the rotated frame the ray climbs by e1+e2 per period with the region
  // on its west side.  Shifting a k-period stretch one cell column east
  // (seam [6] in, [3,2] out) adds k cells; one column west (seam [2,3,2] in,
  // [6] out, skipping one ray edge) removes k cells.  Either way the two
  // seams cost 2 edges net.  The stretch is pushed outward along the ray
  // until the result is collision-free.
  for (int push = 0; push < 64; ++push) {
    InfinitePathSpec cand = frame;
    std::vector<int>& labels = cand.core.labels;
    std::size_t scan_from = labels.size();
    int need = 2 * (push + k + 3);
    for (int i = 0; i < need; ++i)
      labels.push_back(i % 2 == 0 ? cand.right[0] : cand.right[1]);
    std::size_t anchor = labels.size();
    int seen = 0;
    for (std::size_t i = scan_from; i + 1 < labels.size(); ++i)
      if (labels[i] == 1 && labels[i + 1] == 2) {
        if (seen == push) {
          anchor = i;
          break;
        }
        ++seen;
      }
    if (anchor + 2 + 2 * static_cast<std::size_t>(k) > labels.size()) continue;
    std::vector<int> out(labels.begin(),
                         labels.begin() + static_cast<std::ptrdiff_t>(anchor) + 1);
    auto seg_begin = labels.begin() + static_cast<std::ptrdiff_t>(anchor) + 2;
    auto tail_begin = seg_begin + 2 * k;
    if (sign > 0) {
      out.push_back(6);
      out.insert(out.end(), seg_begin, seg_begin + 2 * k);
      out.push_back(3);
      out.push_back(2);
      out.insert(out.end(), tail_begin, labels.end());
    } else {
      out.push_back(2);
      out.push_back(3);
      out.push_back(2);
      out.insert(out.end(), seg_begin, seg_begin + 2 * k - 1);
      out.push_back(6);
      out.insert(out.end(), tail_begin, labels.end());
    }
    cand.core.labels = std::move(out);
    if (validate_spec(cand)) return rotate_spec(cand, -rot);
  }
  throw validation_error("area shift could not find a collision-free window");
}

namespace {

// edges have |dx| <= 1, |dy| <= 2 and |dx|+|dy| = 2 in scaled coordinates
int reroute_lower_bound(Vertex a, Vertex b) {
  auto [ax, ay] = vertex_scaled_position(a);
  auto [bx, by] = vertex_scaled_position(b);
  std::int64_t dx = std::llabs(bx - ax);
  std::int64_t dy = std::llabs(by - ay);
  return static_cast<int>(std::max({dx, (dy + 1) / 2, (dx + dy + 1) / 2}));
}

struct RerouteSearch {
  Vertex target;
  int lead_out = 1;
  std::vector<int> word;
  std::unordered_set<std::uint64_t> used;
  const std::function<bool(const std::vector<int>&)>* accept = nullptr;

  // exact-length lexicographically ordered depth-first search
  bool run(Vertex v, int prev, int remaining) {
    if (remaining == 0)
      return v == target && labels_adjacent(prev, lead_out) && (*accept)(word);
    if (reroute_lower_bound(v, target) > remaining) return false;
    int cands[2] = {prev_label_ccw(prev), next_label_ccw(prev)};
    if (cands[0] > cands[1]) std::swap(cands[0], cands[1]);
    for (int lab : cands) {
      std::uint64_t key = edge_key(v, lab);
      if (used.count(key)) continue;
      used.insert(key);
      word.push_back(lab);
      if (run(step(v, lab), lab, remaining - 1)) return true;
      word.pop_back();
      used.erase(key);
    }
    return false;
  }
};

}  // namespace

Exchange exchange_improvement(const InfinitePathSpec& spec) {
  Classification c = classify(spec);
  if (c.cls != PathClass::NotMinimizing)
    throw validation_error("exchange requires a non-minimizing path");
  InfinitePathSpec base = spec;
  extend_left_in_place(base, 2);
  extend_right_in_place(base, 2);
  const PathWord window = base.core;
  const std::int64_t lw = static_cast<std::int64_t>(window.length());
  Vertex u0 = window.start;
  Vertex u1 = path_end(window);
  int lead_in = base.left[1];
  int lead_out = base.right[0];

  Exchange result;
  bool found = false;
  std::function<bool(const std::vector<int>&)> accept =
      [&](const std::vector<int>& word) -> bool {
    InfinitePathSpec cand = base;
    cand.core.labels = word;
    if (!validate_spec(cand)) return false;
    std::int64_t len = static_cast<std::int64_t>(word.size());
    double delta = signed_area_between(window, cand.core);
    double cells = delta / kCellArea;
    long k = std::lround(cells);
    if (std::fabs(cells - static_cast<double>(k)) > 1e-9) return false;
    if (k == 0) {
      result = {cand, lw - len};
      found = true;
      return true;
    }
    if (len <= lw - 4) {
      try {
        InfinitePathSpec restored =
            shift_area(cand, static_cast<int>(std::labs(k)), k > 0 ? -1 : 1);
        std::int64_t savings = -spec_length_delta(spec, restored);
        if (savings >= 2 && std::fabs(spec_area_delta(spec, restored)) <= 1e-9) {
          result = {restored, savings};
          found = true;
          return true;
        }
      } catch (const validation_error&) {
      }
    }
    return false;
  };

  int lb = reroute_lower_bound(u0, u1);
  for (std::int64_t len = lb; len <= lw - 2 && !found; ++len) {
    if ((len - lw) % 2 != 0) continue;
    RerouteSearch search;
    search.target = u1;
    search.lead_out = lead_out;
    search.accept = &accept;
    search.word.reserve(static_cast<std::size_t>(len));
    search.run(u0, lead_in, static_cast<int>(len));
  }
  if (!found)
    throw validation_error("no improving exchange found within the window");
  return result;
}

}  // namespace hexperim
