#pragma once

#include <stdexcept>
#include <string>

namespace accred {

// Raised for violated preconditions on domain inputs (bad code, bad set, bad
// query). The CLI maps it to exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search would exceed a configured enumeration limit.
class LimitExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

// Something that the construction guarantees cannot happen did happen.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace accred
