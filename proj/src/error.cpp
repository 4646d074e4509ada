#include "aim/error.hpp"

namespace aim {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::BadPattern: return "BadPattern";
    case ErrorCode::ZeroFrequency: return "ZeroFrequency";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ComplexEnergy: return "ComplexEnergy";
    case ErrorCode::IdenticallyZero: return "IdenticallyZero";
    case ErrorCode::NoRealRoots: return "NoRealRoots";
    case ErrorCode::Decoupled: return "Decoupled";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::DomainError: return "DomainError";
  }
  return "Unknown";
}

}  // namespace aim
