#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hexperim/cluster.hpp"
#include "hexperim/enumerate.hpp"
#include "hexperim/honeycomb.hpp"

using namespace hexperim;

namespace {

// free polyhex counts by size, frozen ground truth for 1..10
const std::vector<std::uint64_t> kFreeCounts = {1,   1,    3,    7,    22,
                                                82,  333,  1448, 6572, 30490};
// fixed (translation-only) polyhex counts for 1..8, independent cross-check
const std::vector<std::uint64_t> kFixedCounts = {1,   3,    11,   44,
                                                 186, 814,  3652, 16689};
// minimal exterior perimeter for 1..12
const std::vector<int> kMinT = {6, 10, 12, 14, 16, 18, 18, 20, 22, 22, 24, 24};

EnumerateOptions with_max(int m) {
  EnumerateOptions o;
  o.max_n = m;
  return o;
}

}  // namespace

TEST_CASE("ladder reproduces the free polyhex counts and perimeter minima") {
  auto ladder = enumerate_ladder(10, with_max(10));
  REQUIRE(ladder.size() == 10);
  for (int n = 1; n <= 10; ++n) {
    const EnumerationResult& r = ladder[n - 1];
    CHECK(r.n == n);
    CHECK_FALSE(r.pruned);
    REQUIRE(r.total_free_polyhexes.has_value());
    CHECK(*r.total_free_polyhexes == kFreeCounts[n - 1]);
    CHECK(r.min_t == kMinT[n - 1]);
    CHECK(!r.minimizers.empty());
    // minimizers are canonical, sorted, distinct, and attain min_t
    for (const Cluster& m : r.minimizers) {
      CHECK(canonical_form(m) == m);
      CHECK(perimeters(m).t == r.min_t);
    }
    CHECK(std::is_sorted(r.minimizers.begin(), r.minimizers.end()));
    CHECK(std::adjacent_find(r.minimizers.begin(), r.minimizers.end()) ==
          r.minimizers.end());
  }
}

TEST_CASE("fixed-count cross-check generator") {
  for (int n = 1; n <= 8; ++n)
    CHECK(count_fixed_polyhexes(n) == kFixedCounts[n - 1]);
  CHECK_THROWS_AS(count_fixed_polyhexes(0), validation_error);
  CHECK_THROWS_AS(count_fixed_polyhexes(13), limit_error);
}

TEST_CASE("minimizer multiplicities at the published sizes") {
  CHECK(count_minimizers(1) == 1);
  CHECK(count_minimizers(2) == 1);
  CHECK(count_minimizers(6) == 3);
  CHECK(count_minimizers(7) == 1);
  CHECK(count_minimizers(9) == 4);
}

TEST_CASE("pruned search agrees with the full one") {
  for (int n : {4, 6, 8, 9}) {
    EnumerationResult full = enumerate_polyhexes(n);
    for (int slack : {2, 4}) {
      EnumerateOptions opts;
      opts.prune_bound = static_cast<int>(perimeters(spiral_cluster(n)).t);
      opts.prune_slack = slack;
      EnumerationResult pruned = enumerate_polyhexes(n, opts);
      CHECK(pruned.pruned);
      CHECK_FALSE(pruned.total_free_polyhexes.has_value());
      CHECK(pruned.min_t == full.min_t);
      CHECK(pruned.minimizers == full.minimizers);
    }
  }
}

TEST_CASE("results are independent of the worker count") {
  EnumerationResult lone = enumerate_polyhexes(8);
  EnumerateOptions opts;
  opts.workers = 3;
  EnumerationResult pooled = enumerate_polyhexes(8, opts);
  CHECK(pooled.min_t == lone.min_t);
  CHECK(pooled.total_free_polyhexes == lone.total_free_polyhexes);
  CHECK(pooled.minimizers == lone.minimizers);

  opts.prune_bound = 20;
  opts.workers = 1;
  EnumerationResult pruned1 = enumerate_polyhexes(8, opts);
  opts.workers = 4;
  EnumerationResult pruned4 = enumerate_polyhexes(8, opts);
  CHECK(pruned4.min_t == pruned1.min_t);
  CHECK(pruned4.minimizers == pruned1.minimizers);
}

TEST_CASE("option validation") {
  EnumerateOptions opts;
  opts.prune_bound = 19;  // odd cap is impossible
  CHECK_THROWS_AS(enumerate_polyhexes(6, opts), validation_error);
  opts.prune_bound = -2;
  CHECK_THROWS_AS(enumerate_polyhexes(6, opts), validation_error);
  opts.prune_bound.reset();
  opts.workers = 0;
  CHECK_THROWS_AS(enumerate_polyhexes(6, opts), validation_error);
  opts.workers = 1;
  opts.prune_slack = 0;
  CHECK_THROWS_AS(enumerate_polyhexes(6, opts), validation_error);

  // ladders refuse pruning outright
  EnumerateOptions pruned;
  pruned.prune_bound = 18;
  CHECK_THROWS_AS(enumerate_ladder(6, pruned), validation_error);

  CHECK_THROWS_AS(enumerate_polyhexes(0), validation_error);
  CHECK_THROWS_AS(enumerate_ladder(0), validation_error);
}

TEST_CASE("size limit refusal names limit_error") {
  CHECK_THROWS_AS(enumerate_polyhexes(13), limit_error);
  CHECK_NOTHROW(enumerate_polyhexes(5));
  // a raised limit admits the request
  CHECK_NOTHROW(enumerate_polyhexes(13, with_max(13)));
}

TEST_CASE("raised limit matches the published count at size 13") {
  EnumerationResult r = enumerate_polyhexes(13, with_max(13));
  REQUIRE(r.total_free_polyhexes.has_value());
  CHECK(*r.total_free_polyhexes == 3274826u);
  CHECK(r.min_t == min_exterior_perimeter(13));
}

TEST_CASE("expired time budget raises limit_error") {
  EnumerateOptions opts;
  opts.time_budget_seconds = 0.0;
  CHECK_THROWS_AS(enumerate_polyhexes(10, opts), limit_error);
}

TEST_CASE("greedy growth can strand itself") {
  CHECK(greedy_counterexample_check());
}
