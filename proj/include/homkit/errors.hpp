#pragma once

#include <stdexcept>
#include <string>

namespace homkit {

// Malformed input text or an unknown vertex/label.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction would exceed its configured resource bound.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A machine-checked certificate failed: free-face condition, dual-route
// homology disagreement, or an internal consistency gate.
struct verification_error : std::runtime_error {
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homkit
