#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dcm {

enum class ErrorCode {
  NonExactCell,
  NotConsistent,
  DomainExceeded,
  Infeasible,
  InconsistentTable,
  OutOfRange,
  BadRatio,
  BadRanking,
  CapacityInvalid,
  MonotonicityViolated,
  ComboExplosion,
  EmptyPolytope,
  SchemaError,
  IoError,
  Validation,
  NotFound,
  Conflict,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library. `location` is a JSON pointer or a
// cell reference such as "(1,5)" when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string location = {})
      : std::runtime_error(message), code_(code), location_(std::move(location)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace dcm
