#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>
#include <vector>

#include "hexperim/cluster.hpp"
#include "hexperim/enumerate.hpp"
#include "hexperim/honeycomb.hpp"
#include "hexperim/infpath.hpp"
#include "hexperim/json_io.hpp"
#include "hexperim/svg.hpp"

using namespace hexperim;
using nlohmann::json;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++count;
  return count;
}

InfinitePathSpec halfplane() {
  InfinitePathSpec s;
  s.left = {1, 2};
  s.right = {1, 2};
  s.core.start = Vertex{VertexClass::A, 0, 0};
  return s;
}

}  // namespace

TEST_CASE("cluster serialization carries sorted cells and the counts") {
  Cluster c = spiral_cluster(3);
  std::string text = cluster_json(c);
  json doc = json::parse(text);
  REQUIRE(doc.contains("cells"));
  REQUIRE(doc["cells"].size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(doc["cells"][i][0].get<int>() == c.cells()[i].q);
    CHECK(doc["cells"][i][1].get<int>() == c.cells()[i].r);
  }
  CHECK(doc["perimeters"]["n"] == 3);
  CHECK(doc["perimeters"]["s"] == 3);
  CHECK(doc["perimeters"]["t"] == 12);
  CHECK(doc["perimeters"]["p"] == 15);
  CHECK(cluster_json(c) == text);  // deterministic
}

TEST_CASE("construct report includes the formula comparison and the band") {
  json doc = json::parse(construct_report_json(spiral_cluster(7)));
  CHECK(doc["n"] == 7);
  CHECK(doc["perimeters"]["t"] == 18);
  CHECK(doc["perimeters"]["p"] == 30);
  CHECK(doc["min_exterior_perimeter"] == 18);
  CHECK(doc["exterior_matches_formula"] == true);
  CHECK(doc["band"]["ok"] == true);
  CHECK(doc["band"]["p"].get<double>() == 30.0);
}

TEST_CASE("enumeration serialization honors pruning and inclusion flags") {
  EnumerationResult full = enumerate_polyhexes(6);
  json with = json::parse(enumeration_json(full, true));
  CHECK(with["n"] == 6);
  CHECK(with["pruned"] == false);
  CHECK(with["total_free_polyhexes"] == 82);
  CHECK(with["min_t"] == 18);
  CHECK(with["minimizer_count"] == 3);
  REQUIRE(with["minimizers"].size() == 3);
  CHECK(with["minimizers"][0].size() == 6);

  json without = json::parse(enumeration_json(full, false));
  CHECK_FALSE(without.contains("minimizers"));

  EnumerateOptions opts;
  opts.prune_bound = 18;
  json pruned = json::parse(enumeration_json(enumerate_polyhexes(6, opts), true));
  CHECK(pruned["pruned"] == true);
  CHECK_FALSE(pruned.contains("total_free_polyhexes"));
  CHECK(pruned["minimizer_count"] == 3);
}

TEST_CASE("bounds serialization matches the row sampling") {
  json rows = json::parse(bounds_json(40));
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 40);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i]["n"] == i + 1);
    CHECK(rows[i]["lower_lt_upper"] == true);
    CHECK(rows[i]["lower_lt_honeycomb"] == true);
    CHECK(rows[i]["upper_lt_band"] == (i + 1 >= 39));
    CHECK(rows[i]["savings_chain"] == true);
  }
  CHECK(rows[6]["honeycomb_p"].get<double>() == 30.0);
}

TEST_CASE("path specs round-trip through JSON") {
  InfinitePathSpec spec;
  spec.left = {2, 1};
  spec.right = {2, 1};
  spec.core.start = Vertex{VertexClass::B, -3, 5};
  spec.core.labels = {6, 1, 2, 1, 2, 1, 2, 3};
  std::string text = path_spec_json(spec);
  InfinitePathSpec back = parse_path_spec(text);
  CHECK(back.left == spec.left);
  CHECK(back.right == spec.right);
  CHECK(back.core.start == spec.core.start);
  CHECK(back.core.labels == spec.core.labels);
  json doc = json::parse(text);
  CHECK(doc["start"]["class"] == "B");
  CHECK(doc["start"]["a"] == -3);
  CHECK(doc["start"]["b"] == 5);
}

TEST_CASE("malformed path specs are rejected with a validation error") {
  CHECK_THROWS_AS(parse_path_spec("{"), validation_error);
  CHECK_THROWS_AS(parse_path_spec("[]"), validation_error);
  CHECK_THROWS_AS(parse_path_spec("{}"), validation_error);
  CHECK_THROWS_AS(parse_path_spec(R"({"left":[1,2],"core":[]})"),
                  validation_error);
  CHECK_THROWS_AS(
      parse_path_spec(
          R"({"left":[1,2],"start":{"class":"C","a":0,"b":0},"core":[],"right":[1,2]})"),
      validation_error);
  CHECK_THROWS_AS(
      parse_path_spec(
          R"({"left":[1,2,3],"start":{"class":"A","a":0,"b":0},"core":[],"right":[1,2]})"),
      validation_error);
  CHECK_THROWS_AS(
      parse_path_spec(
          R"({"left":[1,2],"start":{"class":"A","a":0,"b":0},"core":["x"],"right":[1,2]})"),
      validation_error);
}

TEST_CASE("classification reports embed the spec and optional exchange") {
  InfinitePathSpec spec = halfplane();
  Classification cls = classify(spec);
  json doc = json::parse(classification_json(spec, cls, nullptr));
  CHECK(doc["classification"] == "MinimizingUnique");
  CHECK_FALSE(doc["detail"].get<std::string>().empty());
  CHECK(doc["spec"]["left"][0] == 1);
  CHECK_FALSE(doc.contains("exchange"));

  InfinitePathSpec bad;
  bad.left = {1, 2};
  bad.right = {2, 1};
  bad.core.start = Vertex{VertexClass::A, 0, 0};
  bad.core.labels = {3, 4, 3, 2, 3, 4, 3};
  Exchange ex = exchange_improvement(bad);
  json doc2 =
      json::parse(classification_json(bad, classify(bad), &ex));
  CHECK(doc2["classification"] == "NotMinimizing");
  CHECK(doc2["exchange"]["savings"].get<std::int64_t>() == ex.savings);
  CHECK(doc2["exchange"]["improved"].contains("core"));
}

TEST_CASE("cluster svg draws one hexagon per cell") {
  for (int n : {1, 7, 20}) {
    std::string svg = cluster_svg(spiral_cluster(n));
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count_occurrences(svg, "<polygon class=\"cell\"") ==
          static_cast<std::size_t>(n));
    CHECK(count_occurrences(svg, "</svg>") == 1);
    CHECK(svg.find("class=\"midpoint\"") == std::string::npos);
  }
}

TEST_CASE("midpoint overlay adds one polygon per boundary component") {
  RenderOptions opts;
  opts.midpoint_overlay = true;
  std::string svg = cluster_svg(spiral_cluster(7), opts);
  CHECK(count_occurrences(svg, "<polygon class=\"cell\"") == 7);
  CHECK(count_occurrences(svg, "<polygon class=\"midpoint\"") == 1);

  // holed ring: outer rim plus hole rim
  std::vector<CellCoord> ring(kNeighborStep.begin(), kNeighborStep.end());
  std::string holed = cluster_svg(Cluster(ring), opts);
  CHECK(count_occurrences(holed, "<polygon class=\"midpoint\"") == 2);
}

TEST_CASE("svg scale is validated and applied") {
  RenderOptions opts;
  opts.scale = 0.0;
  CHECK_THROWS_AS(cluster_svg(spiral_cluster(1), opts), validation_error);
  opts.scale = -3.0;
  CHECK_THROWS_AS(path_spec_svg(halfplane(), opts), validation_error);

  RenderOptions small, large;
  small.scale = 10.0;
  large.scale = 100.0;
  std::string a = cluster_svg(spiral_cluster(1), small);
  std::string b = cluster_svg(spiral_cluster(1), large);
  CHECK(a != b);
}

TEST_CASE("path spec svg is a single polyline window") {
  std::string svg = path_spec_svg(halfplane());
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count_occurrences(svg, "<polyline class=\"path\"") == 1);
  CHECK(count_occurrences(svg, "</svg>") == 1);
}
