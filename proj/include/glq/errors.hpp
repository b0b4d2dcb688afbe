#pragma once

#include <stdexcept>
#include <string>

namespace glq {

/// Operands live in incompatible ambient spaces.
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its mathematical precondition
/// (non-monotone relation, non-positive prox parameter, ...).
class PreconditionViolation : public std::domain_error {
 public:
  explicit PreconditionViolation(const std::string& what) : std::domain_error(what) {}
};

}  // namespace glq
