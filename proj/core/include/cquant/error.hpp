#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cquant {

enum class ErrorCode {
  DimensionMismatch,
  InvalidLevel,
  IntegralNp,
  NotFullDimensional,
  ContainsLine,
  NotInterior,
  DegenerateBasis,
  EmptyBasis,
  MalformedProgram,
  DimensionNot2,
  EmptySolution,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported with this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cquant
