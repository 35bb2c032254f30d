#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lp01 {

enum class ErrorCode {
  kSingular,
  kUnbounded,
  kInfeasible,
  kCycleSuspected,
  kInvariantViolation,
  kConePropertyViolated,
  kNondegenerateEscape,
  kTooLarge,
  kParseError,
  kInvalidInstance,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the solver, oracle and harness carries a code so
/// callers (and tests) can tell a corrupted input from a defect.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lp01
