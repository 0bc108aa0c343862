#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fmds {

enum class Errc {
  NotPrime,
  OrderTooLarge,
  NotIrreducible,
  ContextMismatch,
  DivisionByZero,
  NotSquare,
  IndexOutOfRange,
  CombinationOverflow,
  Singular,
  NoRootOfUnity,
  StepNotCoprime,
  InvalidArgument,
  RankDeficient,
  WrongProvenance,
  FieldNotEven,
  FieldTooSmall,
  NotStandardForm,
  LengthMismatch,
  TooManyErasures,
  DecodingFailure,
  SearchTooLarge,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fmds
