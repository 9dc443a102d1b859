#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fj {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class ErrorKind {
  NonSquare,
  OrderBound,
  CapExceeded,
  NotThreeTransposition,
  EmptyPerp,
  BadBaseGroup,
  OracleMismatch,
  ParseError,
  NotInvolution,
  InconsistentLine,
  BadParams,
  BadEta,
  WrongEta,
  MissingLabels,
  NotAnIdeal,
  NotIdempotent,
  NotSemisimple,
  NonScalarNorm,
  NotHermitianResult,
  ReferenceMismatch,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace fj
