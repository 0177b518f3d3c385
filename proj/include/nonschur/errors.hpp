#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nonschur {

// Precondition violated by an argument (zero vector, negative entry, bad box).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vectors of incompatible length, or objects living on different quivers.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Randomized computation produced an impossible value.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecompositionNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that holds by algebra failed; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Collects every failed check instead of stopping at the first one.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> failures);
  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  std::vector<std::string> failures_;
};

}  // namespace nonschur
