#pragma once

#include <stdexcept>
#include <string>

namespace ctwalk {

// Raised when an input violates a documented contract: bad dimensions,
// malformed graph specs, convention/regularity mismatches, negative time.
// The message names the violated constraint.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ctwalk
