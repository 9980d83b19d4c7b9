#pragma once

#include <stdexcept>
#include <string>

namespace skein {

/// Exact division was requested but the remainder is nonzero.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested size is beyond what the state-sum / enumeration code will attempt.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configuration that cannot arise from embedded input was produced.
/// Seeing this means a bug in the diagram code, not bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace skein
