#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disclab {

enum class ErrorKind {
  UnknownVariable,
  SyntaxError,
  VarSetMismatch,
  MissingCoordinate,
  VariableCollision,
  ZeroInput,
  NotHomogeneous,
  DimensionMismatch,
  DegenerateSpecialization,
  DegreeTooSmall,
  DegreePreconditionViolated,
  BudgetExceeded,
  EmptyList,
  IndexOutOfRange,
  AllDegreesOne,
  HypersurfaceConditionViolated,
  NotGroebner,
  TooManyActive,
  InfeasibleStartBudget,
  FlagMissing,
  NotInterior,
  DegreeMismatch,
  GroupMismatch,
  EmptySupport,
  DimensionTooLarge,
  WrongArity,
  Usage,
  InputParse,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::VarSetMismatch: return "VarSetMismatch";
    case ErrorKind::MissingCoordinate: return "MissingCoordinate";
    case ErrorKind::VariableCollision: return "VariableCollision";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateSpecialization: return "DegenerateSpecialization";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::DegreePreconditionViolated: return "DegreePreconditionViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::AllDegreesOne: return "AllDegreesOne";
    case ErrorKind::HypersurfaceConditionViolated: return "HypersurfaceConditionViolated";
    case ErrorKind::NotGroebner: return "NotGroebner";
    case ErrorKind::TooManyActive: return "TooManyActive";
    case ErrorKind::InfeasibleStartBudget: return "InfeasibleStartBudget";
    case ErrorKind::FlagMissing: return "FlagMissing";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::InputParse: return "InputParse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError, "at offset " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace disclab
