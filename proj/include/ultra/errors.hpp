#pragma once

#include <stdexcept>
#include <string>

namespace ultra {

/// An argument lies outside an operation's domain (not in the lattice,
/// not idempotent, edges from a different graph, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard was exceeded. Results are never silently truncated.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised by groupoid-dependent operations when the ultragraph has sinks.
class SinksPresentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed ultragraph description (unknown vertex, empty range, ...).
class UltragraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ultra
