#pragma once

#include <stdexcept>
#include <string>

namespace braidsig {

enum class ErrorCode {
  Parse = 1,       // malformed braid text
  IndexRange,      // generator index 0 or >= strands
  Precondition,    // operation called outside its domain
  Inconsistent,    // invariants contradict each other
  Argument,        // bad argument value (non-square matrix, empty range, ...)
  Overflow,        // family or search space exceeds the configured cap
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace braidsig
