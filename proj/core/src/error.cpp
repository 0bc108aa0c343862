#include "fmds/error.hpp"

namespace fmds {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotSquare: return "NotSquare";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::CombinationOverflow: return "CombinationOverflow";
    case Errc::Singular: return "Singular";
    case Errc::NoRootOfUnity: return "NoRootOfUnity";
    case Errc::StepNotCoprime: return "StepNotCoprime";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::WrongProvenance: return "WrongProvenance";
    case Errc::FieldNotEven: return "FieldNotEven";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::NotStandardForm: return "NotStandardForm";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooManyErasures: return "TooManyErasures";
    case Errc::DecodingFailure: return "DecodingFailure";
    case Errc::SearchTooLarge: return "SearchTooLarge";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace fmds
