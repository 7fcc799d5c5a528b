#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mapoly {

enum class ErrorCode {
  UnboundedSystem,
  EmptyOrLowerDimensional,
  DegenerateInput,
  NotReflexive,
  VariableCountMismatch,
  TruncatedEvaluation,
  ZeroConstantTerm,
  NegativeCoefficient,
  MissingBaseVertex,
  InconsistentConstraints,
  TemplateInconsistent,
  UnsupportedDimension,
  ParseError,
  DimensionMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure reported by the library. `code()` identifies the contract
/// that was violated; parse errors additionally carry a 1-based line number.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::optional<int> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<int> line_;
};

}  // namespace mapoly
