#pragma once

#include <stdexcept>
#include <string>

namespace qbsm {

// Invalid user-supplied configuration: bad parameters, malformed files,
// inconsistent dimensions. The CLI maps this class to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Estimation cannot proceed or produced unusable numbers (sample sizes too
// small for a requested quantile, non-finite model output, ...). The CLI
// maps this class to exit code 3.
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qbsm
