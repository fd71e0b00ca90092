#include "cyset/error.hpp"

namespace cyset {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NonDegeneracyViolation: return "NonDegeneracyViolation";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyTuple: return "EmptyTuple";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::CompositionInvalid: return "CompositionInvalid";
    case ErrorCode::TrivialClass: return "TrivialClass";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::CensusMismatch: return "CensusMismatch";
  }
  return "Unknown";
}

}  // namespace cyset
