// hexperim: spiral construction, exhaustive enumeration, perimeter bound
// tables and two-ended path classification on the unit hexagonal lattice.
//
// exit codes: 0 success, 2 validation error, 3 range/limit refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hexperim/cluster.hpp"
#include "hexperim/enumerate.hpp"
#include "hexperim/errors.hpp"
#include "hexperim/honeycomb.hpp"
#include "hexperim/infpath.hpp"
#include "hexperim/json_io.hpp"
#include "hexperim/planebounds.hpp"
#include "hexperim/svg.hpp"

namespace {

using namespace hexperim;

constexpr int kExitValidation = 2;
constexpr int kExitLimit = 3;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot open output file: " + path);
  out << text;
  out.flush();
  if (!out) throw validation_error("failed writing output file: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open spec file: " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

// the built-in enumeration limit can be raised via HEXPERIM_MAX_N
int enumeration_limit() {
  const char* env = std::getenv("HEXPERIM_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationLimit;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    throw validation_error("HEXPERIM_MAX_N must be a positive integer");
  return static_cast<int>(v);
}

struct ConstructArgs {
  std::int64_t n = 0;
  std::string svg_path;
  std::string json_path;
  double scale = 40.0;
  bool midpoint = false;
};

int run_construct(const ConstructArgs& a) {
  if (a.n < 1) throw validation_error("cluster size must be at least 1");
  Cluster c = spiral_cluster(a.n);
  if (!a.svg_path.empty()) {
    RenderOptions opts;
    opts.scale = a.scale;
    opts.midpoint_overlay = a.midpoint;
    write_file(a.svg_path, cluster_svg(c, opts));
  }
  std::string report = construct_report_json(c);
  if (!a.json_path.empty())
    write_file(a.json_path, report);
  else
    std::cout << report;
  return 0;
}

struct EnumerateArgs {
  std::int64_t n = 0;
  bool all = false;
  bool minimizers = false;
  int workers = 1;
};

int run_enumerate(const EnumerateArgs& a) {
  if (a.all == a.minimizers)
    throw validation_error("choose exactly one of --all or --minimizers");
  if (a.n < 1) throw validation_error("cluster size must be at least 1");
  EnumerateOptions opts;
  opts.workers = a.workers;
  opts.max_n = enumeration_limit();
  if (a.n > opts.max_n)
    throw limit_error("cluster size " + std::to_string(a.n) +
                      " exceeds the enumeration limit " +
                      std::to_string(opts.max_n) +
                      " (set HEXPERIM_MAX_N to raise it)");
  if (a.minimizers) {
    // the spiral's exterior perimeter is an achievable incumbent bound
    Perimeters incumbent = perimeters(spiral_cluster(a.n));
    opts.prune_bound = static_cast<int>(incumbent.t);
  }
  EnumerationResult result =
      enumerate_polyhexes(static_cast<int>(a.n), opts);
  std::cout << enumeration_json(result, true);
  return 0;
}

struct BoundsArgs {
  std::int64_t n_max = 0;
  bool csv = false;
  bool json = false;
};

int run_bounds(const BoundsArgs& a) {
  if (a.csv && a.json)
    throw validation_error("choose at most one of --csv and --json");
  if (a.n_max < 1) throw validation_error("n_max must be at least 1");
  std::cout << (a.json ? bounds_json(a.n_max) : bounds_csv(a.n_max));
  return 0;
}

struct ClassifyArgs {
  std::string spec_path;
  std::string svg_path;
  double scale = 40.0;
};

int run_classify(const ClassifyArgs& a) {
  InfinitePathSpec spec = parse_path_spec(read_file(a.spec_path));
  if (!validate_spec(spec))
    throw validation_error(
        "path spec does not describe a simple two-ended path");
  Classification cls = classify(spec);
  std::optional<Exchange> exchange;
  if (cls.cls == PathClass::NotMinimizing) {
    try {
      exchange = exchange_improvement(spec);
    } catch (const validation_error&) {
      // no improving exchange inside the search window; still report
    }
  }
  if (!a.svg_path.empty()) {
    RenderOptions opts;
    opts.scale = a.scale;
    write_file(a.svg_path, path_spec_svg(spec, opts));
  }
  std::cout << classification_json(spec, cls,
                                   exchange ? &*exchange : nullptr);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "perimeter-minimizing clusters on the unit hexagonal lattice"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  CLI::App* construct = app.add_subcommand(
      "construct", "build the spiral cluster with n cells and report its "
                   "perimeter quantities");
  construct->add_option("n", construct_args.n, "number of cells")->required();
  construct->add_option("--svg", construct_args.svg_path,
                        "write an SVG rendering to this file");
  construct->add_option("--json", construct_args.json_path,
                        "write the JSON report here instead of stdout");
  construct->add_option("--scale", construct_args.scale,
                        "SVG pixels per lattice unit");
  construct->add_flag("--midpoint", construct_args.midpoint,
                      "overlay the boundary midpoint polygon in the SVG");

  EnumerateArgs enumerate_args;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate",
      "enumerate clusters with n cells up to congruence");
  enumerate->add_option("n", enumerate_args.n, "number of cells")->required();
  enumerate->add_flag("--all", enumerate_args.all,
                      "full enumeration with total counts");
  enumerate->add_flag("--minimizers", enumerate_args.minimizers,
                      "prune to the minimum-exterior-perimeter clusters");
  enumerate->add_option("--workers", enumerate_args.workers,
                        "worker threads for the enumeration");

  BoundsArgs bounds_args;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "tabulate perimeter bounds for clusters up to n_max cells");
  bounds->add_option("n_max", bounds_args.n_max, "largest cluster size")
      ->required();
  bounds->add_flag("--csv", bounds_args.csv, "emit CSV (default)");
  bounds->add_flag("--json", bounds_args.json, "emit JSON");

  ClassifyArgs classify_args;
  CLI::App* classify = app.add_subcommand(
      "classify",
      "classify a two-ended boundary path spec and, when it is not "
      "minimizing, report an improving exchange");
  classify->add_option("spec", classify_args.spec_path,
                       "path spec JSON file")
      ->required();
  classify->add_option("--svg", classify_args.svg_path,
                       "write an SVG rendering of the spec window");
  classify->add_option("--scale", classify_args.scale,
                       "SVG pixels per lattice unit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (construct->parsed()) return run_construct(construct_args);
    if (enumerate->parsed()) return run_enumerate(enumerate_args);
    if (bounds->parsed()) return run_bounds(bounds_args);
    if (classify->parsed()) return run_classify(classify_args);
  } catch (const limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
