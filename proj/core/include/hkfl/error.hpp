#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hkfl {

enum class ErrorCode {
  NotSquare,
  NotSymmetric,
  NotEven,
  Degenerate,
  BadParameter,
  Overflow,
  ZeroVector,
  CheckFailed,
  TooLarge,
  BoundTooLarge,
  OutOfScope,
  BadParity,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. The code is what callers dispatch on;
// the message names the violated precondition or carries the failing values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hkfl
