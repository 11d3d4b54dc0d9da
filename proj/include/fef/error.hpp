#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fef {

enum class ErrorCode {
  InvalidDimension,
  Index,
  Shape,
  Validation,
  Numeric,
  Precondition,
  Range,
  Construction,
  Certification,
  Parse,
  Io,
  Usage,
};

/// Machine-parsable identifier, e.g. "E_VALIDATION".
std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above. The
/// CLI prints `<code name>: <message>` on a single line and exits nonzero.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fef
