#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "hexperim/cluster.hpp"
#include "hexperim/honeycomb.hpp"
#include "hexperim/infpath.hpp"
#include "hexperim/midpoint.hpp"

using namespace hexperim;

namespace {

// class of the vertex an arriving edge with this label lands on
VertexClass head_class(int label) {
  return label % 2 == 1 ? VertexClass::B : VertexClass::A;
}

InfinitePathSpec make_spec(std::array<int, 2> left, std::vector<int> core,
                           std::array<int, 2> right) {
  InfinitePathSpec s;
  s.left = left;
  s.right = right;
  s.core.start = Vertex{head_class(left[1]), 0, 0};
  s.core.labels = std::move(core);
  return s;
}

PathWord word_from(VertexClass cls, std::vector<int> labels) {
  PathWord w;
  w.start = Vertex{cls, 0, 0};
  w.labels = std::move(labels);
  return w;
}

// the eight canonical window shapes and their expected classes
struct Fixture {
  InfinitePathSpec spec;
  PathClass want;
};

std::vector<Fixture> canonical_fixtures() {
  using PC = PathClass;
  return {
      {make_spec({1, 2}, {}, {1, 2}), PC::MinimizingUnique},
      {make_spec({1, 2}, {3}, {2, 1}), PC::MinimizingUnique},
      {make_spec({1, 2}, {3, 2, 1, 2, 3}, {2, 1}), PC::MinimizingNonUnique},
      {make_spec({1, 2}, {}, {3, 2}), PC::MinimizingUnique},
      {make_spec({1, 2}, {3, 2, 1}, {2, 3}), PC::MinimizingUnique},
      {make_spec({1, 2}, {3, 2, 1, 2, 1}, {2, 3}), PC::MinimizingNonUnique},
      {make_spec({1, 2}, {3, 2, 3, 2, 1}, {2, 3}), PC::MinimizingNonUnique},
      {make_spec({2, 1}, {6, 1, 2, 1, 2, 1, 2, 3}, {2, 1}),
       PC::ConditionallyMinimizing},
  };
}

const double kArea = kCellArea;

}  // namespace

TEST_CASE("validate accepts lawful words and rejects broken ones") {
  CHECK(validate(word_from(VertexClass::A, {})));
  CHECK(validate(word_from(VertexClass::A, {1, 2, 1, 2})));
  CHECK(validate(word_from(VertexClass::B, {2, 1, 2, 3})));
  // closed hexagon revisits its start vertex; that is allowed
  CHECK(validate(word_from(VertexClass::A, {1, 2, 3, 4, 5, 6})));
  // ... but the seventh edge retraces the first
  CHECK_FALSE(validate(word_from(VertexClass::A, {1, 2, 3, 4, 5, 6, 1})));
  // successor rule: consecutive labels differ by one
  CHECK_FALSE(validate(word_from(VertexClass::A, {1, 3})));
  CHECK_FALSE(validate(word_from(VertexClass::A, {1, 4})));
  // label range
  CHECK_FALSE(validate(word_from(VertexClass::A, {0})));
  CHECK_FALSE(validate(word_from(VertexClass::A, {7})));
  // parity: label 1 leaves class A only
  CHECK_FALSE(validate(word_from(VertexClass::B, {1, 2})));
  CHECK_FALSE(validate(word_from(VertexClass::A, {2, 1})));
}

TEST_CASE("label distance counts signed uses of a direction") {
  PathWord w = word_from(VertexClass::A, {1, 2, 1, 2, 1});
  CHECK(label_distance(w, 1) == 3);
  CHECK(label_distance(w, 4) == -3);
  CHECK(label_distance(w, 2) == 2);
  CHECK(label_distance(w, 5) == -2);
  CHECK(label_distance(w, 3) == 0);
  CHECK(label_distance(w, 6) == 0);

  // slices add up
  for (int lab = 1; lab <= 6; ++lab)
    CHECK(label_distance(w, lab, 0, 2) + label_distance(w, lab, 2, 5) ==
          label_distance(w, lab));

  CHECK_THROWS_AS(label_distance(w, 0), validation_error);
  CHECK_THROWS_AS(label_distance(w, 7), validation_error);
  CHECK_THROWS_AS(label_distance(w, 1, 3, 2), validation_error);
  CHECK_THROWS_AS(label_distance(w, 1, 0, 6), validation_error);

  // around a closed loop every direction cancels
  PathWord hex = word_from(VertexClass::A, {1, 2, 3, 4, 5, 6});
  for (int lab = 1; lab <= 6; ++lab) CHECK(label_distance(hex, lab) == 0);
}

TEST_CASE("label distances determine the endpoint displacement") {
  // scaled displacement of each label, in units of (sqrt(3)/2, 1/2)
  const int dx[7] = {0, 0, -1, -1, 0, 1, 1};
  const int dy[7] = {0, 2, 1, -1, -2, -1, 1};
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    PathWord w;
    w.start = Vertex{VertexClass::A, 3, -2};
    int lab = 1;
    w.labels.push_back(lab);
    for (int i = 0; i < 30; ++i) {
      lab = coin(rng) ? next_label_ccw(lab) : prev_label_ccw(lab);
      w.labels.push_back(lab);
    }
    auto [sx, sy] = vertex_scaled_position(w.start);
    auto [ex, ey] = vertex_scaled_position(path_end(w));
    std::int64_t gx = 0, gy = 0;
    for (int l = 1; l <= 3; ++l) {
      std::int64_t d = label_distance(w, l);
      gx += d * dx[l];
      gy += d * dy[l];
    }
    CHECK(gx == ex - sx);
    CHECK(gy == ey - sy);
  }
}

TEST_CASE("two sides of a cluster boundary agree on every label distance") {
  // both halves of a boundary loop join the same two vertices; their signed
  // direction counts must coincide (independence of the route)
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> size(3, 24);
  for (int trial = 0; trial < 100; ++trial) {
    Cluster c = spiral_cluster(size(rng));
    BoundaryPath bp = boundary_components(c);
    REQUIRE(bp.components.size() == 1);
    const PathWord& loop = bp.components[0];
    std::size_t L = loop.length();
    std::uniform_int_distribution<std::size_t> cut(1, L - 1);
    std::size_t i = cut(rng);
    std::vector<Vertex> verts = trace_vertices(loop);

    PathWord first;  // the loop's first i edges
    first.start = loop.start;
    first.labels.assign(loop.labels.begin(), loop.labels.begin() + i);
    PathWord second;  // the remaining edges, walked backwards
    second.start = loop.start;
    for (std::size_t j = L; j > i; --j)
      second.labels.push_back(opposite_label(loop.labels[j - 1]));

    REQUIRE(validate(first));
    REQUIRE(validate(second));
    REQUIRE(path_end(first) == verts[i]);
    REQUIRE(path_end(second) == verts[i]);
    for (int lab = 1; lab <= 6; ++lab)
      CHECK(label_distance(first, lab) == label_distance(second, lab));
  }
}

TEST_CASE("area between a short cut and the long way round one cell") {
  // around cell (0,0): the two-edge route has the cell on its left, the
  // four-edge route leaves it on the right
  PathWord shortcut;
  shortcut.start = boundary_edge_tail({0, 0}, 0);
  shortcut.labels = {1, 2};
  PathWord longway;
  longway.start = shortcut.start;
  longway.labels = {3, 2, 1, 6};
  REQUIRE(validate(longway));
  REQUIRE(path_end(longway) == path_end(shortcut));

  CHECK(signed_area_between(shortcut, longway) ==
        doctest::Approx(-kArea).epsilon(1e-12));
  CHECK(signed_area_between(longway, shortcut) ==
        doctest::Approx(kArea).epsilon(1e-12));
  CHECK(signed_area_between(shortcut, shortcut) ==
        doctest::Approx(0.0).epsilon(1e-12));

  PathWord elsewhere = word_from(VertexClass::A, {1});
  CHECK_THROWS_AS(signed_area_between(shortcut, elsewhere), validation_error);
}

TEST_CASE("materialize anchors the core and repeats the ray periods") {
  InfinitePathSpec hp = make_spec({1, 2}, {}, {1, 2});
  PathWord w = materialize(hp, 2, 3);
  CHECK(w.labels == std::vector<int>{1, 2, 1, 2, 1, 2, 1, 2, 1, 2});
  std::vector<Vertex> verts = trace_vertices(w);
  CHECK(verts[4] == hp.core.start);  // two left periods precede the core
  CHECK(validate(w));

  PathWord bare = materialize(hp, 0, 0);
  CHECK(bare.labels.empty());
  CHECK(bare.start == hp.core.start);

  CHECK_THROWS_AS(materialize(hp, -1, 0), validation_error);
}

TEST_CASE("spec validation accepts the canonical shapes") {
  for (const Fixture& f : canonical_fixtures()) CHECK(validate_spec(f.spec));
}

TEST_CASE("spec validation rejects local and global defects") {
  // ray labels out of range / not alternating
  CHECK_FALSE(validate_spec(make_spec({0, 1}, {}, {1, 2})));
  CHECK_FALSE(validate_spec(make_spec({1, 4}, {}, {1, 2})));
  CHECK_FALSE(validate_spec(make_spec({1, 2}, {}, {2, 2})));
  // broken junction: core cannot continue with the same label
  CHECK_FALSE(validate_spec(make_spec({1, 2}, {1}, {1, 2})));
  // wrong start parity
  InfinitePathSpec wrong = make_spec({1, 2}, {}, {1, 2});
  wrong.core.start.cls = VertexClass::B;
  CHECK_FALSE(validate_spec(wrong));
  // locally lawful but the right ray runs into the left one
  CHECK_FALSE(validate_spec(make_spec({1, 2}, {3, 4}, {5, 6})));
}

TEST_CASE("class names are stable strings") {
  CHECK(std::string(path_class_name(PathClass::MinimizingUnique)) ==
        "MinimizingUnique");
  CHECK(std::string(path_class_name(PathClass::MinimizingNonUnique)) ==
        "MinimizingNonUnique");
  CHECK(std::string(path_class_name(PathClass::ConditionallyMinimizing)) ==
        "ConditionallyMinimizing");
  CHECK(std::string(path_class_name(PathClass::NotMinimizing)) ==
        "NotMinimizing");
}

TEST_CASE("classifier reproduces the canonical labels") {
  for (const Fixture& f : canonical_fixtures()) {
    Classification got = classify(f.spec);
    CHECK(got.cls == f.want);
    CHECK_FALSE(got.detail.empty());
  }
}

TEST_CASE("classifier flags wide direction sets as not minimizing") {
  // four directions with the extreme label used twice
  InfinitePathSpec four = make_spec({1, 2}, {3, 4, 3, 2, 3, 4, 3}, {2, 1});
  REQUIRE(validate_spec(four));
  CHECK(classify(four).cls == PathClass::NotMinimizing);

  // five directions
  InfinitePathSpec five = make_spec({1, 2}, {3, 4, 5}, {4, 5});
  REQUIRE(validate_spec(five));
  CHECK(classify(five).cls == PathClass::NotMinimizing);

  CHECK_THROWS_AS(classify(make_spec({1, 2}, {1}, {1, 2})), validation_error);
}

TEST_CASE("area shifts move whole cells at two extra edges") {
  std::vector<InfinitePathSpec> specs = {
      make_spec({1, 2}, {}, {1, 2}),
      make_spec({1, 2}, {3}, {2, 1}),
      make_spec({1, 2}, {3, 2, 1}, {2, 3}),
      make_spec({2, 1}, {6, 1, 2, 1, 2, 1, 2, 3}, {2, 1}),
  };
  for (const InfinitePathSpec& spec : specs) {
    for (int k : {1, 2, 3, 7, 10}) {
      for (int sign : {1, -1}) {
        InfinitePathSpec moved = shift_area(spec, k, sign);
        CHECK(validate_spec(moved));
        CHECK(moved.left == spec.left);
        CHECK(moved.right == spec.right);
        double want = sign * k * kArea;
        CHECK(spec_area_delta(spec, moved) ==
              doctest::Approx(want).epsilon(1e-9));
        CHECK(spec_length_delta(spec, moved) == 2);
      }
    }
  }
}

TEST_CASE("area shift edge cases") {
  InfinitePathSpec hp = make_spec({1, 2}, {}, {1, 2});
  InfinitePathSpec same = shift_area(hp, 0, 1);
  CHECK(spec_length_delta(hp, same) == 0);
  CHECK(spec_area_delta(hp, same) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(shift_area(hp, 1, 0), validation_error);
  CHECK_THROWS_AS(shift_area(hp, 1, 2), validation_error);
  CHECK_THROWS_AS(shift_area(hp, -1, 1), validation_error);
  CHECK_THROWS_AS(shift_area(make_spec({1, 2}, {1}, {1, 2}), 1, 1),
                  validation_error);
}

TEST_CASE("aligned spec comparison is antisymmetric and ray-checked") {
  InfinitePathSpec a = make_spec({1, 2}, {3, 2, 1}, {2, 3});
  InfinitePathSpec b = shift_area(a, 3, 1);
  CHECK(spec_area_delta(a, a) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(spec_length_delta(a, a) == 0);
  CHECK(spec_area_delta(a, b) ==
        doctest::Approx(-spec_area_delta(b, a)).epsilon(1e-9));
  CHECK(spec_length_delta(a, b) == -spec_length_delta(b, a));

  InfinitePathSpec other_rays = make_spec({1, 2}, {}, {1, 2});
  CHECK_THROWS_AS(spec_area_delta(a, other_rays), validation_error);
  // same ray labels but a different core displacement: the rays are parallel
  // lines, not the same line, so the comparison must refuse
  InfinitePathSpec offset_rays = make_spec({1, 2}, {3, 2, 1, 2, 1}, {2, 3});
  CHECK_THROWS_AS(spec_area_delta(a, offset_rays), validation_error);
}

TEST_CASE("exchange strictly shortens non-minimizing specs at equal area") {
  std::vector<InfinitePathSpec> bad = {
      make_spec({1, 2}, {3, 4, 3, 2, 3, 4, 3}, {2, 1}),
      make_spec({1, 2}, {3, 4, 5}, {4, 5}),
  };
  for (const InfinitePathSpec& spec : bad) {
    REQUIRE(classify(spec).cls == PathClass::NotMinimizing);
    Exchange ex = exchange_improvement(spec);
    CHECK(ex.savings >= 2);
    CHECK(validate_spec(ex.improved));
    CHECK(ex.improved.left == spec.left);
    CHECK(ex.improved.right == spec.right);
    CHECK(spec_length_delta(spec, ex.improved) == -ex.savings);
    CHECK(std::abs(spec_area_delta(spec, ex.improved)) <= 1e-9);
  }
}

TEST_CASE("exchange refuses minimizing specs") {
  CHECK_THROWS_AS(exchange_improvement(make_spec({1, 2}, {}, {1, 2})),
                  validation_error);
  CHECK_THROWS_AS(
      exchange_improvement(make_spec({1, 2}, {3, 2, 1, 2, 3}, {2, 1})),
      validation_error);
}
