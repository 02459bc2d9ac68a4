#ifndef HOPFCYC_ERROR_HPP
#define HOPFCYC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hopfcyc {

enum class Errc {
  // exact_linalg
  CompositionNotZero,
  DivisionByZero,
  DimensionMismatch,
  Singular,
  InvalidField,
  // hopf_core
  NotAGroup,
  CharTwo,
  AxiomFailure,
  // cylindrical
  IdentityFailure,
  NotInverse,
  NotIntertwining,
  ClosedFormMismatch,
  NotWellDefined,
  NotRestricting,
  // homology_engine
  MixedIdentityFailure,
  TruncationTooShallow,
  BoundaryNotSquareZero,
  CoboundaryNotSquareZero,
  NotSemisimple,
  NotCosemisimple,
  HomotopyFailure,
  TotalNotSquareZero,
  FiltrationViolation,
  // cli
  ParseError,
  MissingBlock,
};

inline const char* errc_name(Errc c)
{
  switch (c) {
  case Errc::CompositionNotZero: return "CompositionNotZero";
  case Errc::DivisionByZero: return "DivisionByZero";
  case Errc::DimensionMismatch: return "DimensionMismatch";
  case Errc::Singular: return "Singular";
  case Errc::InvalidField: return "InvalidField";
  case Errc::NotAGroup: return "NotAGroup";
  case Errc::CharTwo: return "CharTwo";
  case Errc::AxiomFailure: return "AxiomFailure";
  case Errc::IdentityFailure: return "IdentityFailure";
  case Errc::NotInverse: return "NotInverse";
  case Errc::NotIntertwining: return "NotIntertwining";
  case Errc::ClosedFormMismatch: return "ClosedFormMismatch";
  case Errc::NotWellDefined: return "NotWellDefined";
  case Errc::NotRestricting: return "NotRestricting";
  case Errc::MixedIdentityFailure: return "MixedIdentityFailure";
  case Errc::TruncationTooShallow: return "TruncationTooShallow";
  case Errc::BoundaryNotSquareZero: return "BoundaryNotSquareZero";
  case Errc::CoboundaryNotSquareZero: return "CoboundaryNotSquareZero";
  case Errc::NotSemisimple: return "NotSemisimple";
  case Errc::NotCosemisimple: return "NotCosemisimple";
  case Errc::HomotopyFailure: return "HomotopyFailure";
  case Errc::TotalNotSquareZero: return "TotalNotSquareZero";
  case Errc::FiltrationViolation: return "FiltrationViolation";
  case Errc::ParseError: return "ParseError";
  case Errc::MissingBlock: return "MissingBlock";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace hopfcyc

#endif // HOPFCYC_ERROR_HPP
