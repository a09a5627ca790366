#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccs {

enum class ErrorCode {
  InvalidArgument,
  BadShape,
  CollinearTriple,
  DuplicatePoint,
  RepeatedLabel,
  NTooLarge,
  NTooSmall,
  SubsetTooSmall,
  NTooLargeForBrute,
  NotConvex,
  HullCycleBroken,
  PInX,
  AmbiguousRelation,
  NoRelation,
  BothOrNeither,
  InvalidColoring,
  NoConvexKSet,
  AssemblyContradiction,
  ExhaustedAttempts,
  SyntaxError,
  AxiomViolation,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every library failure. `witness` carries the labels
/// that triggered the failure when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace ccs
