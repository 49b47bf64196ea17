#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

enum class Errc {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  DivisionByZero,
  DimensionMismatch,
  FieldMismatch,
  NotAUnit,
  InvalidGroup,
  DegreeOverflow,
  BasisNotFinite,
  NotConfluent,
  InconsistentPresentation,
  ResidueNotField,
  TimeBudgetExceeded,
  SyntaxError,
  UnknownGenerator,
  UnknownField,
  UnknownName,
  Unsupported,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::InvalidGroup: return "InvalidGroup";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::BasisNotFinite: return "BasisNotFinite";
    case Errc::NotConfluent: return "NotConfluent";
    case Errc::InconsistentPresentation: return "InconsistentPresentation";
    case Errc::ResidueNotField: return "ResidueNotField";
    case Errc::TimeBudgetExceeded: return "TimeBudgetExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::UnknownField: return "UnknownField";
    case Errc::UnknownName: return "UnknownName";
    case Errc::Unsupported: return "Unsupported";
    case Errc::Internal: return "Internal";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, int line = 0, int col = 0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        line_(line),
        col_(col) {}

  Errc code() const { return code_; }
  int line() const { return line_; }  // 1-based; 0 when not a parse error
  int col() const { return col_; }

 private:
  Errc code_;
  int line_;
  int col_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, int line = 0,
                              int col = 0) {
  throw Error(code, msg, line, col);
}

}  // namespace ringlab
