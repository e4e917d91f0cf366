#pragma once

#include <stdexcept>

namespace dimint {

/// Thrown when an argument lies outside an operation's mathematical domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Thrown when a minimization fails to converge (or never finds a finite value).
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dimint
