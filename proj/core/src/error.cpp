#include "hkfl/error.hpp"

namespace hkfl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::OutOfScope: return "OutOfScope";
    case ErrorCode::BadParity: return "BadParity";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace hkfl
