#include "ccs/core/error.hpp"

namespace ccs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::CollinearTriple: return "CollinearTriple";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::RepeatedLabel: return "RepeatedLabel";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::SubsetTooSmall: return "SubsetTooSmall";
    case ErrorCode::NTooLargeForBrute: return "NTooLargeForBrute";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::HullCycleBroken: return "HullCycleBroken";
    case ErrorCode::PInX: return "PInX";
    case ErrorCode::AmbiguousRelation: return "AmbiguousRelation";
    case ErrorCode::NoRelation: return "NoRelation";
    case ErrorCode::BothOrNeither: return "BothOrNeither";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::NoConvexKSet: return "NoConvexKSet";
    case ErrorCode::AssemblyContradiction: return "AssemblyContradiction";
    case ErrorCode::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<int> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : Error(ErrorCode::SyntaxError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
      line_(line),
      column_(column) {}

}  // namespace ccs
