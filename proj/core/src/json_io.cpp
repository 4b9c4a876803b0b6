#include "hexperim/json_io.hpp"

#include <json.hpp>

#include "hexperim/errors.hpp"
#include "hexperim/honeycomb.hpp"
#include "hexperim/planebounds.hpp"

namespace hexperim {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json cells_array(const std::vector<CellCoord>& cells) {
  ordered_json arr = ordered_json::array();
  for (CellCoord c : cells) arr.push_back(ordered_json::array({c.q, c.r}));
  return arr;
}

ordered_json perimeter_record(const Cluster& c) {
  Perimeters p = perimeters(c);
  ordered_json rec;
  rec["n"] = p.n;
  rec["s"] = p.s;
  rec["t"] = p.t;
  rec["p"] = p.p;
  return rec;
}

ordered_json spec_object(const InfinitePathSpec& spec) {
  ordered_json obj;
  obj["left"] = ordered_json::array({spec.left[0], spec.left[1]});
  ordered_json start;
  start["class"] = spec.core.start.cls == VertexClass::A ? "A" : "B";
  start["a"] = spec.core.start.a;
  start["b"] = spec.core.start.b;
  obj["start"] = start;
  obj["core"] = spec.core.labels;
  obj["right"] = ordered_json::array({spec.right[0], spec.right[1]});
  return obj;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string cluster_json(const Cluster& c) {
  ordered_json obj;
  obj["cells"] = cells_array(c.cells());
  obj["perimeters"] = perimeter_record(c);
  return dump(obj);
}

std::string construct_report_json(const Cluster& c) {
  Perimeters p = perimeters(c);
  PerimeterBand band = total_perimeter_band(static_cast<std::int64_t>(c.size()));
  ordered_json obj;
  obj["n"] = p.n;
  obj["cells"] = cells_array(c.cells());
  ordered_json per;
  per["s"] = p.s;
  per["t"] = p.t;
  per["p"] = p.p;
  obj["perimeters"] = per;
  obj["min_exterior_perimeter"] = min_exterior_perimeter(p.n);
  obj["exterior_matches_formula"] = p.t == min_exterior_perimeter(p.n);
  ordered_json b;
  b["p"] = band.p;
  b["lower"] = band.lower;
  b["upper"] = band.upper;
  b["ok"] = band.ok;
  obj["band"] = b;
  return dump(obj);
}

std::string enumeration_json(const EnumerationResult& r, bool include_clusters) {
  ordered_json obj;
  obj["n"] = r.n;
  obj["pruned"] = r.pruned;
  if (r.total_free_polyhexes) obj["total_free_polyhexes"] = *r.total_free_polyhexes;
  obj["min_t"] = r.min_t;
  obj["minimizer_count"] = r.minimizers.size();
  if (include_clusters) {
    ordered_json list = ordered_json::array();
    for (const Cluster& m : r.minimizers) list.push_back(cells_array(m.cells()));
    obj["minimizers"] = list;
  }
  return dump(obj);
}

std::string bounds_json(std::int64_t n_max) {
  ordered_json rows = ordered_json::array();
  for (std::int64_t n : bounds_rows(n_max)) {
    BoundsReport rep = bounds_report(n);
    ordered_json row;
    row["n"] = n;
    row["lower"] = rep.lower;
    row["honeycomb_p"] = rep.honeycomb_p;
    row["upper"] = rep.upper;
    row["cox_estimate"] = rep.cox_estimate;
    row["conjectured"] = rep.conjectured;
    row["lower_lt_upper"] = rep.lower < rep.upper;
    row["lower_lt_honeycomb"] = rep.lower < rep.honeycomb_p;
    row["upper_lt_band"] = rep.upper < band_upper_limit(n);
    row["savings_chain"] = savings_chain_check(n);
    rows.push_back(row);
  }
  return dump(rows);
}

std::string path_spec_json(const InfinitePathSpec& spec) {
  return dump(spec_object(spec));
}

InfinitePathSpec parse_path_spec(const std::string& text) {
  ordered_json obj;
  try {
    obj = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("malformed path spec JSON: ") + e.what());
  }
  try {
    InfinitePathSpec spec;
    const auto& left = obj.at("left");
    const auto& right = obj.at("right");
    if (!left.is_array() || left.size() != 2 || !right.is_array() ||
        right.size() != 2)
      throw validation_error("ray periods must be two-label arrays");
    spec.left = {left.at(0).get<int>(), left.at(1).get<int>()};
    spec.right = {right.at(0).get<int>(), right.at(1).get<int>()};
    const auto& start = obj.at("start");
    std::string cls = start.at("class").get<std::string>();
    if (cls != "A" && cls != "B")
      throw validation_error("vertex class must be \"A\" or \"B\"");
    spec.core.start.cls = cls == "A" ? VertexClass::A : VertexClass::B;
    spec.core.start.a = start.at("a").get<int>();
    spec.core.start.b = start.at("b").get<int>();
    spec.core.labels = obj.at("core").get<std::vector<int>>();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("malformed path spec JSON: ") + e.what());
  }
}

std::string classification_json(const InfinitePathSpec& spec,
                                const Classification& cls, const Exchange* ex) {
  ordered_json obj;
  obj["classification"] = path_class_name(cls.cls);
  obj["detail"] = cls.detail;
  obj["spec"] = spec_object(spec);
  if (ex != nullptr) {
    ordered_json x;
    x["savings"] = ex->savings;
    x["improved"] = spec_object(ex->improved);
    obj["exchange"] = x;
  }
  return dump(obj);
}

}  // namespace hexperim
