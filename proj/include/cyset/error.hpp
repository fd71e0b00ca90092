#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyset {

enum class ErrorCode {
  NotAPermutation,
  NonDegeneracyViolation,
  CapExceeded,
  IndexOutOfRange,
  DimensionMismatch,
  EmptyTuple,
  NegativeExponent,
  NotCoprime,
  CompositionInvalid,
  TrivialClass,
  InvalidModulus,
  NotReduced,
  ParseError,
  Overflow,
  CensusMismatch,
};

std::string_view code_name(ErrorCode code) noexcept;

/// Domain error raised by every library operation. The CLI reports these as
/// "ERR <code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cyset
