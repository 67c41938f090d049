#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wdc {

enum class ErrorCode {
  InvalidInput,
  EulerViolation,
  EmptySet,
  UncoloredVertex,
  BudgetExceeded,
  NoWitness,
  CounterexampleFound,
  IslandSearchFailed,
  PreconditionViolated,
  NotAStack,
  NotActive,
  StackExpected,
  GirthViolation,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the CLI
// maps them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wdc
