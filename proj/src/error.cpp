#include "fj/error.hpp"

namespace fj {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::OrderBound: return "OrderBound";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotThreeTransposition: return "NotThreeTransposition";
    case ErrorKind::EmptyPerp: return "EmptyPerp";
    case ErrorKind::BadBaseGroup: return "BadBaseGroup";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::InconsistentLine: return "InconsistentLine";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BadEta: return "BadEta";
    case ErrorKind::WrongEta: return "WrongEta";
    case ErrorKind::MissingLabels: return "MissingLabels";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NonScalarNorm: return "NonScalarNorm";
    case ErrorKind::NotHermitianResult: return "NotHermitianResult";
    case ErrorKind::ReferenceMismatch: return "ReferenceMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace fj
