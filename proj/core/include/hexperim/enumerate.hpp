#pragma once

// exhaustive generation of free polyhexes (connected cell sets up to the
// 12-element congruence group) with optional branch pruning against an
// exterior-perimeter cap.  this is the ground-truth oracle the closed-form
// perimeter results are checked against.

#include <cstdint>
#include <optional>
#include <vector>

#include "hexperim/cluster.hpp"

namespace hexperim {

// default upper limit for enumeration requests; callers (e.g. the CLI via
// HEXPERIM_MAX_N) can raise it through EnumerateOptions::max_n.
inline constexpr int kDefaultEnumerationLimit = 12;

struct EnumerateOptions {
  // even exterior-perimeter cap at the target size.  when set, any partial
  // cluster that provably cannot come back under the cap is discarded and
  // only min_t / minimizers are meaningful in the result.
  std::optional<int> prune_bound;
  // per-added-cell perimeter recovery assumed by the prune test: a partial
  // with n' cells and perimeter t' is kept iff
  //   t' <= prune_bound + prune_slack * (n - n').
  // 2 is the tight choice; 4 is the conservative fallback.
  int prune_slack = 2;
  // number of expansion threads; results are independent of this value.
  int workers = 1;
  // refusal limit for the requested size.
  int max_n = kDefaultEnumerationLimit;
  // optional wall-clock cap; limit_error is thrown when exceeded.
  std::optional<double> time_budget_seconds;
};

struct EnumerationResult {
  int n = 0;
  // count of congruence classes; absent when pruning was active.
  std::optional<std::uint64_t> total_free_polyhexes;
  int min_t = 0;
  // canonical forms achieving min_t, in sorted order.
  std::vector<Cluster> minimizers;
  bool pruned = false;
};

// every free polyhex of each size 1..n_max, visited once via canonical-form
// growth (add one adjacent cell, canonicalize, deduplicate).  rejects a
// prune_bound: intermediate levels would be invalid under pruning.
std::vector<EnumerationResult> enumerate_ladder(int n_max,
                                                const EnumerateOptions& opts = {});

// single-size result.  without prune_bound this is enumerate_ladder(n).back();
// with it, branches that cannot reach the cap by size n are discarded.
EnumerationResult enumerate_polyhexes(int n, const EnumerateOptions& opts = {});

// number of congruence classes achieving the minimum exterior perimeter.
std::uint64_t count_minimizers(int n, const EnumerateOptions& opts = {});

// independently coded cross-check generator: counts fixed polyhexes
// (connected cell sets up to translation only) by depth-first growth from a
// normalized root cell.  shares no code with the canonical-form path.
std::uint64_t count_fixed_polyhexes(int n);

// true iff some minimum-perimeter 6-cluster reachable by adding one cell to
// a minimum-perimeter 5-cluster is contained (up to congruence) in no
// minimum-perimeter 7-cluster, i.e. one-cell-at-a-time greedy growth can
// strand itself.
bool greedy_counterexample_check();

}  // namespace hexperim
