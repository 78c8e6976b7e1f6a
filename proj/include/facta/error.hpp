#pragma once

#include <stdexcept>
#include <string>

namespace facta {

/// Bad workload description: unknown attributes, malformed plans, invalid
/// schemas. Maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input data: missing files, unparsable rows. Maps to CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace facta
