#pragma once

#include <stdexcept>
#include <string>

namespace hexperim {

// Bad input: malformed words, empty clusters, out-of-range indices, ...
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured or hard implementation limit.
struct limit_error : std::runtime_error {
  explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hexperim
