#pragma once

#include <stdexcept>
#include <string>

namespace slope {

// Precondition / input violations: bad user data, out-of-range arguments.
class invalid_input : public std::invalid_argument {
 public:
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Broken internal identity (dual-route mismatch, impossible state). Always a bug.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace slope
