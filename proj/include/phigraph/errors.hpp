#pragma once

#include <stdexcept>

namespace phigraph {

/// A caller passed arguments outside an operation's domain.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested computation is larger than the configured size cap.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph construction violated a structural invariant (loop, unknown or
/// duplicate label).
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace phigraph
