#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opaque {

enum class ErrorCode {
  kSyntax,
  kSchema,
  kNonConvex,
  kZeroLengthSegment,
  kDegenerateHull,
  kPrecondition,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace opaque
