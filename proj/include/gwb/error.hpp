#pragma once

#include <stdexcept>
#include <string>

namespace gwb {

/// Malformed input: bad group descriptions, bad arguments, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that the mathematics guarantees was observed to fail.
/// Seeing one means the implementation is wrong, not the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gwb
