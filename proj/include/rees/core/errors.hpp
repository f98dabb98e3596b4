#pragma once

#include <stdexcept>

namespace rees {

// Malformed or out-of-contract input: bad documents, rank mismatches,
// violated preconditions. The CLI maps these to its input-error status.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant the engine relies on failed to hold. Always a bug
// (or a resource cap hit on a computation that must terminate).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rees
