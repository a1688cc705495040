#pragma once

#include <stdexcept>
#include <string>

namespace sumkit {

/// Operands live over different variable contexts or incompatible divisor ends.
struct ContextMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A coefficient was requested above the truncation order. The value is
/// unknown, which is not the same as zero.
struct CutoffExceeded : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// An operation's precondition on its input failed (non-unit constant term,
/// singular pairing, grading-0 obstruction, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace sumkit
