#pragma once

#include <stdexcept>
#include <string>

namespace radon {

// Error categories aligned with the CLI exit codes:
//   input_error -> 2, hypothesis_error -> 3, numerics_error -> 4.

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A theorem's hypothesis does not hold for the requested construction
// (e.g. the Y family requested with h >= 1/(n+1)).
struct hypothesis_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct numerics_error : std::runtime_error {
  explicit numerics_error(const std::string& msg, double achieved = 0.0)
      : std::runtime_error(msg), achieved_error(achieved) {}
  double achieved_error;
};

}  // namespace radon
