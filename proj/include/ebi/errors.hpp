#pragma once

#include <stdexcept>
#include <string>

namespace ebi {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Part sizes rejected: even, nonpositive, or m < n.
class InstanceError : public Error {
  using Error::Error;
};

/// Labeling construction or swap violated an edge-level precondition.
class LabelingError : public Error {
  using Error::Error;
};

/// Malformed labeling, trace, or report text.
class ParseError : public Error {
  using Error::Error;
};

/// Descent: neither part contains both a 0-vertex and a 1-vertex.
class NoMixedPart : public Error {
  using Error::Error;
};

/// Descent: no candidate pair satisfies deg0(x) > deg1(y).
class AssertionBreach : public Error {
  using Error::Error;
};

/// Descent target index is odd, negative, or above the start index.
class TargetUnreachable : public Error {
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
  using Error::Error;
};

}  // namespace ebi
