#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Invalid caller input: malformed root data, out-of-range indices,
/// precondition violations on basis indices, parse failures.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal invariant failed (length/descent inconsistency, overflow,
/// a straightening loop that did not terminate). Always a bug or a
/// convention mismatch, never a user error.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hecke
