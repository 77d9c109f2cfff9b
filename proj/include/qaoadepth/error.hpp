#pragma once

#include <stdexcept>
#include <string>

namespace qaoadepth {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
  invalid_input = 1,
  infeasible_constraint = 2,
  gate_width = 3,
  budget_exceeded = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace qaoadepth
