#pragma once

#include <stdexcept>
#include <string>

namespace zmcenter {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (table, subgroup or automorphism enumeration) was exceeded.
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what_bound, unsigned long long requested,
                unsigned long long bound)
      : Error(what_bound + " bound exceeded: " + std::to_string(requested) + " > " +
              std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}

  unsigned long long requested() const noexcept { return requested_; }
  unsigned long long bound() const noexcept { return bound_; }

 private:
  unsigned long long requested_;
  unsigned long long bound_;
};

/// A search gave up before finding an answer (never a wrong answer).
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace zmcenter
