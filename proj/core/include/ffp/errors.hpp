#pragma once

#include <stdexcept>

namespace ffp {

// Input breaks a structural invariant (non-Hermitian, non-orthonormal, shape
// mismatch, malformed file).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well-formed but outside the stated domain of an operation
// (e.g. a non-normalized (dims, weights) pair where one is required).
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured enumeration or iteration budget was exceeded.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ffp
