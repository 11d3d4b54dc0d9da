#include "fef/error.hpp"

namespace fef {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDimension: return "E_DIMENSION";
    case ErrorCode::Index: return "E_INDEX";
    case ErrorCode::Shape: return "E_SHAPE";
    case ErrorCode::Validation: return "E_VALIDATION";
    case ErrorCode::Numeric: return "E_NUMERIC";
    case ErrorCode::Precondition: return "E_PRECONDITION";
    case ErrorCode::Range: return "E_RANGE";
    case ErrorCode::Construction: return "E_CONSTRUCTION";
    case ErrorCode::Certification: return "E_CERTIFICATION";
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::Io: return "E_IO";
    case ErrorCode::Usage: return "E_USAGE";
  }
  return "E_UNKNOWN";
}

}  // namespace fef
