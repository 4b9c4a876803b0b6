#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hexperim/cluster.hpp"
#include "hexperim/enumerate.hpp"
#include "hexperim/honeycomb.hpp"
#include "hexperim/infpath.hpp"
#include "hexperim/midpoint.hpp"

using namespace hexperim;

namespace {

std::vector<CellCoord> random_cells(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick;
  std::vector<CellCoord> cells{{0, 0}};
  CellSet set(cells);
  while (static_cast<int>(cells.size()) < n) {
    CellCoord base = cells[pick(rng) % cells.size()];
    CellCoord cand = base + kNeighborStep[pick(rng) % 6];
    if (set.contains(cand)) continue;
    set.insert(cand);
    cells.push_back(cand);
  }
  return cells;
}

void bm_canonical_form(benchmark::State& state) {
  std::vector<CellCoord> cells =
      random_cells(static_cast<int>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_cells(cells));
}
BENCHMARK(bm_canonical_form)->Arg(8)->Arg(64)->Arg(512);

void bm_enumerate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    EnumerationResult r = enumerate_polyhexes(n);
    benchmark::DoNotOptimize(r.total_free_polyhexes);
  }
}
BENCHMARK(bm_enumerate)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_enumerate_pruned(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  EnumerateOptions opts;
  opts.prune_bound = static_cast<int>(perimeters(spiral_cluster(n)).t);
  for (auto _ : state) {
    EnumerationResult r = enumerate_polyhexes(n, opts);
    benchmark::DoNotOptimize(r.min_t);
  }
}
BENCHMARK(bm_enumerate_pruned)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void bm_spiral_trace(benchmark::State& state) {
  std::int64_t n = state.range(0);
  Cluster c = spiral_cluster(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(boundary_components(c).total_edges());
}
BENCHMARK(bm_spiral_trace)->Arg(1000)->Arg(10000);

void bm_min_exterior_perimeter(benchmark::State& state) {
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_exterior_perimeter(n));
    n = n % 1000000 + 1;
  }
}
BENCHMARK(bm_min_exterior_perimeter);

void bm_midpoint_area(benchmark::State& state) {
  Cluster c(random_cells(static_cast<int>(state.range(0)), 11));
  PathWord loop = boundary_components(c).components[0];
  for (auto _ : state) {
    MidpointPolygon m = midpoint_polygon(loop);
    benchmark::DoNotOptimize(m.closed ? polygon_area(m) : m.length());
  }
}
BENCHMARK(bm_midpoint_area)->Arg(64)->Arg(512);

void bm_classify(benchmark::State& state) {
  InfinitePathSpec spec;
  spec.left = {2, 1};
  spec.right = {2, 1};
  spec.core.start = Vertex{VertexClass::B, 0, 0};
  spec.core.labels = {6, 1, 2, 1, 2, 1, 2, 3};
  for (auto _ : state)
    benchmark::DoNotOptimize(classify(spec).cls);
}
BENCHMARK(bm_classify);

}  // namespace

BENCHMARK_MAIN();
