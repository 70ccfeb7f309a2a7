#pragma once

#include <stdexcept>
#include <string>

namespace dgg {

enum class ErrorCode {
  InvalidArgument = 1,
  OutOfRange = 2,
  Parse = 3,
  Unsupported = 4,
  Engine = 5,
};

// Single exception type for the library. The C API maps `code()` onto its
// status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dgg
