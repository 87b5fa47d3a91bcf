#pragma once

#include <stdexcept>
#include <string>

namespace taut {

// Bad arguments: unstable (g,n), negative exponents, malformed terms, length mismatches.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// The memo table or a persisted cache disagrees with itself.
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace taut
