#pragma once

#include <stdexcept>
#include <string>

namespace sphercat {

enum class ErrorCode {
  not_prime,
  shape_mismatch,
  composite_not_zero,
  singular,
  algebra_mismatch,
  invalid_module,
  not_in_category,
  wrong_sign,
  undefined_for_tube,
  window_too_small,
  kind_mismatch,
  parse_error,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sphercat
