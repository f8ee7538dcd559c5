#pragma once

#include <stdexcept>
#include <string>

namespace epquad {

/// Input data violates a documented precondition (e.g. a transform was
/// handed an operator that is not energy-preserving).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result contradicts an identity that is guaranteed to hold; indicates
/// a bug in this library, not bad user input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A least-squares inference produced no finite solution for any
/// regularization value.
class InferenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full-order time integration produced a non-finite state.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double time)
      : std::runtime_error(what), time_of_failure(time) {}
  double time_of_failure;
};

/// Reduced-order time integration diverged. An expected, reportable outcome
/// for poorly regularized models rather than a crash.
class UnstableModelError : public std::runtime_error {
 public:
  UnstableModelError(const std::string& what, double time)
      : std::runtime_error(what), time_of_divergence(time) {}
  double time_of_divergence;
};

}  // namespace epquad
