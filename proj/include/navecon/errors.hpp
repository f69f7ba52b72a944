#pragma once

#include <stdexcept>
#include <string>

namespace navecon {

// Raised when an input value, record, or configuration violates a documented
// invariant. Maps to exit code 1 in the CLI.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on filesystem failures (missing input, unwritable output path).
// Maps to exit code 2 in the CLI.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when simulation state turns non-finite; the message carries the
// episode seed so the run can be reproduced.
class SimulationError : public std::runtime_error {
 public:
  explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace navecon
