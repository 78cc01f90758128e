#include "stabcat/error.hpp"

namespace stabcat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::QuiverMismatch: return "QuiverMismatch";
    case ErrorKind::Cyclic: return "Cyclic";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::DuplicateArrowName: return "DuplicateArrowName";
    case ErrorKind::NotAnQuiver: return "NotAnQuiver";
    case ErrorKind::NotEpi: return "NotEpi";
    case ErrorKind::NotMono: return "NotMono";
    case ErrorKind::NotProjective: return "NotProjective";
    case ErrorKind::NotAbelianCase: return "NotAbelianCase";
    case ErrorKind::NoneExists: return "NoneExists";
    case ErrorKind::IsActuallyEpi: return "IsActuallyEpi";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::SplitAssertionFailed: return "SplitAssertionFailed";
    case ErrorKind::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::OracleMismatch ||
         kind == ErrorKind::SplitAssertionFailed ||
         kind == ErrorKind::InternalAssertion;
}

}  // namespace stabcat
