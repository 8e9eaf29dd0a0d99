#pragma once

#include <stdexcept>
#include <string>

namespace linfty {

enum class ErrorCode {
  Rational,        // malformed rational literal
  Parity,          // parity mismatch in a graded object
  Shape,           // dimension or index mismatch
  Space,           // objects living on different spaces
  Precondition,    // an operation's precondition is violated
  Truncation,      // requested weight exceeds the available cutoff
  Size,            // dimension exceeds the configured cap
  Input,           // malformed document
  NotNilpotent,    // series failed to terminate within the cap
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace linfty
