#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subnest {

// Stable error codes; the CLI maps them one-to-one onto process exit codes,
// so values must not be reordered between releases.
enum class ErrorCode : int {
  missing_column = 10,
  type_error = 11,
  pattern_violation = 12,
  infeasible_design = 13,
  rank_deficient = 14,
  separation = 15,
  not_converged = 16,
  empty_arm = 17,
  empty_stratum = 18,
  degenerate_sampling = 19,
  degenerate_weight = 20,
  not_census = 21,
  mismatched_data = 22,
  too_many_failures = 23,
  bracket_failure = 24,
  missing_design_column = 25,
  invalid_config = 26,
  io_error = 27,
  precondition = 28,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::missing_column: return "missing-column";
    case ErrorCode::type_error: return "type-error";
    case ErrorCode::pattern_violation: return "pattern-violation";
    case ErrorCode::infeasible_design: return "infeasible-design";
    case ErrorCode::rank_deficient: return "rank-deficient";
    case ErrorCode::separation: return "separation";
    case ErrorCode::not_converged: return "not-converged";
    case ErrorCode::empty_arm: return "empty-arm";
    case ErrorCode::empty_stratum: return "empty-stratum";
    case ErrorCode::degenerate_sampling: return "degenerate-sampling";
    case ErrorCode::degenerate_weight: return "degenerate-weight";
    case ErrorCode::not_census: return "not-census";
    case ErrorCode::mismatched_data: return "mismatched-data";
    case ErrorCode::too_many_failures: return "too-many-failures";
    case ErrorCode::bracket_failure: return "bracket-failure";
    case ErrorCode::missing_design_column: return "missing-design-column";
    case ErrorCode::invalid_config: return "invalid-config";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::precondition: return "precondition";
  }
  return "unknown";
}

}  // namespace subnest
