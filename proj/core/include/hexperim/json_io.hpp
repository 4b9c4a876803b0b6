#pragma once

// Deterministic JSON serialization: identical inputs always produce
// byte-identical output.  The JSON library stays private to the
// implementation.

#include <cstdint>
#include <string>

#include "hexperim/cluster.hpp"
#include "hexperim/enumerate.hpp"
#include "hexperim/infpath.hpp"

namespace hexperim {

// cells plus the (n, s, t, p) record
std::string cluster_json(const Cluster& c);

// construct-command report: cells, perimeter record, exterior-perimeter
// formula comparison and the total-perimeter band check
std::string construct_report_json(const Cluster& c);

// enumeration result; minimizer cell lists included on request
std::string enumeration_json(const EnumerationResult& r, bool include_clusters);

// same rows and flags as the CSV table, as a JSON array
std::string bounds_json(std::int64_t n_max);

std::string path_spec_json(const InfinitePathSpec& spec);

// throws validation_error on malformed input
InfinitePathSpec parse_path_spec(const std::string& text);

// classification report; pass the improving exchange when one was computed
std::string classification_json(const InfinitePathSpec& spec,
                                const Classification& cls, const Exchange* ex);

}  // namespace hexperim
