#include "hexperim/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>

#include "hexperim/errors.hpp"
#include "hexperim/lattice.hpp"

namespace hexperim {

namespace {

// canonical cell lists are packed into byte strings: two bytes per cell,
// biased so supported coordinate ranges stay inside [0, 255].  canonical
// coordinates start at (0, 0) and byte order equals cell order, so string
// comparison is the lexicographic cluster comparison.
constexpr int kPackOffset = 100;

std::string pack_cells(const std::vector<CellCoord>& cells) {
  std::string key(cells.size() * 2, '\0');
  for (std::size_t i = 0; i < cells.size(); ++i) {
    key[2 * i] = static_cast<char>(cells[i].q + kPackOffset);
    key[2 * i + 1] = static_cast<char>(cells[i].r + kPackOffset);
  }
  return key;
}

std::vector<CellCoord> unpack_cells(const std::string& key) {
  std::vector<CellCoord> cells(key.size() / 2);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    cells[i].q = static_cast<int>(static_cast<unsigned char>(key[2 * i])) - kPackOffset;
    cells[i].r = static_cast<int>(static_cast<unsigned char>(key[2 * i + 1])) - kPackOffset;
  }
  return cells;
}

int exterior_perimeter(const std::vector<CellCoord>& cells, const CellSet& set) {
  int t = 0;
  for (CellCoord c : cells)
    for (CellCoord nb : neighbors(c))
      if (!set.contains(nb)) ++t;
  return t;
}

using KeySet = std::unordered_set<std::string>;

struct Deadline {
  bool enabled = false;
  std::chrono::steady_clock::time_point at{};
  std::atomic<bool> exceeded{false};

  explicit Deadline(const EnumerateOptions& opts) {
    if (opts.time_budget_seconds) {
      enabled = true;
      at = std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(*opts.time_budget_seconds));
    }
  }
};

// expands parents [lo, hi); children failing the exterior-perimeter cap are
// dropped before deduplication
void expand_range(const std::vector<std::string>& parents, std::size_t lo,
                  std::size_t hi, std::optional<int> child_cap, Deadline& dl,
                  KeySet& out) {
  std::vector<CellCoord> child;
  for (std::size_t i = lo; i < hi; ++i) {
    if (dl.enabled && (i & 0x1ff) == 0) {
      if (dl.exceeded.load(std::memory_order_relaxed)) return;
      if (std::chrono::steady_clock::now() > dl.at) {
        dl.exceeded.store(true);
        return;
      }
    }
    std::vector<CellCoord> cells = unpack_cells(parents[i]);
    CellSet set(cells);
    int parent_t = 0;
    CellSet grow;
    for (CellCoord c : cells)
      for (CellCoord nb : neighbors(c))
        if (!set.contains(nb)) {
          ++parent_t;
          grow.insert(nb);
        }
    child = cells;
    child.emplace_back();
    for (CellCoord nb : grow.cells()) {
      if (child_cap) {
        int inside = 0;
        for (CellCoord nb2 : neighbors(nb))
          if (set.contains(nb2)) ++inside;
        if (parent_t + 6 - 2 * inside > *child_cap) continue;
      }
      child.back() = nb;
      out.insert(pack_cells(canonical_cells(child)));
    }
  }
}

std::vector<std::string> expand_level(const std::vector<std::string>& parents,
                                      std::optional<int> child_cap, int workers,
                                      Deadline& dl) {
  // avoid thread overhead on small frontiers
  int w = std::min<int>(workers, static_cast<int>(parents.size() / 64) + 1);
  KeySet merged;
  if (w <= 1) {
    merged.reserve(parents.size() * 5);
    expand_range(parents, 0, parents.size(), child_cap, dl, merged);
  } else {
    std::vector<KeySet> outs(static_cast<std::size_t>(w));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(w));
    std::size_t chunk = (parents.size() + static_cast<std::size_t>(w) - 1) /
                        static_cast<std::size_t>(w);
    for (int k = 0; k < w; ++k) {
      std::size_t lo = static_cast<std::size_t>(k) * chunk;
      std::size_t hi = std::min(parents.size(), lo + chunk);
      threads.emplace_back([&parents, lo, hi, child_cap, &dl, &outs, k] {
        expand_range(parents, lo, hi, child_cap, dl, outs[static_cast<std::size_t>(k)]);
      });
    }
    for (std::thread& t : threads) t.join();
    // set-semantics merge makes the result independent of the partitioning
    merged = std::move(outs[0]);
    for (int k = 1; k < w; ++k) merged.merge(outs[static_cast<std::size_t>(k)]);
  }
  if (dl.exceeded.load()) throw limit_error("enumeration time budget exhausted");
  std::vector<std::string> next(merged.begin(), merged.end());
  std::sort(next.begin(), next.end());
  return next;
}

EnumerationResult result_from_level(int n, const std::vector<std::string>& keys,
                                    bool pruned) {
  EnumerationResult res;
  res.n = n;
  res.pruned = pruned;
  if (!pruned) res.total_free_polyhexes = keys.size();
  int best = std::numeric_limits<int>::max();
  std::vector<const std::string*> winners;
  for (const std::string& key : keys) {
    std::vector<CellCoord> cells = unpack_cells(key);
    CellSet set(cells);
    int t = exterior_perimeter(cells, set);
    if (t < best) {
      best = t;
      winners.clear();
    }
    if (t == best) winners.push_back(&key);
  }
  if (winners.empty()) return res;  // prune cap below every reachable perimeter
  res.min_t = best;
  res.minimizers.reserve(winners.size());
  for (const std::string* key : winners)
    res.minimizers.push_back(Cluster(unpack_cells(*key)));
  return res;
}

void check_options(const EnumerateOptions& opts) {
  if (opts.workers < 1) throw validation_error("worker count must be at least 1");
  if (opts.max_n < 1) throw validation_error("enumeration limit must be positive");
  if (opts.prune_slack < 1) throw validation_error("prune slack must be positive");
  if (opts.prune_bound && (*opts.prune_bound < 0 || *opts.prune_bound % 2 != 0))
    throw validation_error("prune bound must be a nonnegative even integer");
}

void check_size(int n, const EnumerateOptions& opts) {
  if (n < 1) throw validation_error("cluster size must be positive");
  if (n > opts.max_n)
    throw limit_error("cluster size " + std::to_string(n) +
                      " exceeds the enumeration limit " + std::to_string(opts.max_n));
}

}  // namespace

std::vector<EnumerationResult> enumerate_ladder(int n_max,
                                                const EnumerateOptions& opts) {
  check_options(opts);
  check_size(n_max, opts);
  if (opts.prune_bound)
    throw validation_error("pruning is only valid for a single target size");
  Deadline dl(opts);
  std::vector<std::string> level{pack_cells({CellCoord{0, 0}})};
  std::vector<EnumerationResult> out;
  out.reserve(static_cast<std::size_t>(n_max));
  out.push_back(result_from_level(1, level, false));
  for (int k = 2; k <= n_max; ++k) {
    level = expand_level(level, std::nullopt, opts.workers, dl);
    out.push_back(result_from_level(k, level, false));
  }
  return out;
}

EnumerationResult enumerate_polyhexes(int n, const EnumerateOptions& opts) {
  check_options(opts);
  check_size(n, opts);
  if (!opts.prune_bound) return std::move(enumerate_ladder(n, opts).back());
  Deadline dl(opts);
  std::vector<std::string> level{pack_cells({CellCoord{0, 0}})};
  for (int k = 2; k <= n; ++k) {
    int cap = *opts.prune_bound + opts.prune_slack * (n - k);
    level = expand_level(level, cap, opts.workers, dl);
  }
  return result_from_level(n, level, true);
}

std::uint64_t count_minimizers(int n, const EnumerateOptions& opts) {
  return enumerate_polyhexes(n, opts).minimizers.size();
}

namespace {

// fixed-count recursion: clusters are normalized so the lexicographically
// least cell is the origin; every other cell must then be lex-greater.
struct FixedCounter {
  int target = 0;
  std::uint64_t total = 0;
  CellSet occupied;
  CellSet reached;

  static bool allowed(CellCoord c) { return c.q > 0 || (c.q == 0 && c.r >= 0); }

  void run(std::vector<CellCoord> untried, int size) {
    while (!untried.empty()) {
      CellCoord c = untried.back();
      untried.pop_back();
      if (size + 1 == target) {
        ++total;
        continue;  // c stays in `reached`: later branches exclude it
      }
      occupied.insert(c);
      std::vector<CellCoord> child = untried;
      std::vector<CellCoord> added;
      for (CellCoord nb : neighbors(c))
        if (allowed(nb) && !reached.contains(nb)) {
          reached.insert(nb);
          child.push_back(nb);
          added.push_back(nb);
        }
      run(std::move(child), size + 1);
      for (CellCoord nb : added) reached.erase(nb);
      occupied.erase(c);
    }
  }
};

}  // namespace

std::uint64_t count_fixed_polyhexes(int n) {
  if (n < 1) throw validation_error("cluster size must be positive");
  if (n > 12)
    throw limit_error("fixed-count cross-check supports sizes up to 12");
  if (n == 1) return 1;
  FixedCounter fc;
  fc.target = n;
  CellCoord origin{0, 0};
  fc.occupied.insert(origin);
  fc.reached.insert(origin);
  std::vector<CellCoord> untried;
  for (CellCoord nb : neighbors(origin))
    if (FixedCounter::allowed(nb)) {
      fc.reached.insert(nb);
      untried.push_back(nb);
    }
  fc.run(std::move(untried), 1);
  return fc.total;
}

bool greedy_counterexample_check() {
  std::vector<EnumerationResult> ladder = enumerate_ladder(7);
  const EnumerationResult& r5 = ladder[4];
  const EnumerationResult& r6 = ladder[5];
  const EnumerationResult& r7 = ladder[6];

  KeySet six_minimizers;
  for (const Cluster& m : r6.minimizers) six_minimizers.insert(pack_cells(m.cells()));

  // six-cell minimizers reachable by one greedy step from a five-cell minimizer
  KeySet reachable;
  for (const Cluster& m5 : r5.minimizers) {
    CellSet set(m5.cells());
    CellSet grow;
    for (CellCoord c : m5.cells())
      for (CellCoord nb : neighbors(c))
        if (!set.contains(nb)) grow.insert(nb);
    std::vector<CellCoord> child = m5.cells();
    child.emplace_back();
    for (CellCoord nb : grow.cells()) {
      child.back() = nb;
      std::string key = pack_cells(canonical_cells(child));
      if (six_minimizers.count(key)) reachable.insert(key);
    }
  }

  // congruence classes of six-cell subsets of seven-cell minimizers
  KeySet sub_seven;
  for (const Cluster& m7 : r7.minimizers) {
    const std::vector<CellCoord>& cells = m7.cells();
    for (std::size_t skip = 0; skip < cells.size(); ++skip) {
      std::vector<CellCoord> rest;
      rest.reserve(cells.size() - 1);
      for (std::size_t j = 0; j < cells.size(); ++j)
        if (j != skip) rest.push_back(cells[j]);
      sub_seven.insert(pack_cells(canonical_cells(rest)));
    }
  }

  for (const std::string& key : reachable)
    if (!sub_seven.count(key)) return true;
  return false;
}

}  // namespace hexperim
