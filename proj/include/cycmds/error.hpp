#pragma once

#include <stdexcept>
#include <string>

namespace cycmds {

enum class ErrorCode {
  InvalidSpec,
  ConductorMismatch,
  NotCoprime,
  NotSquare,
  BudgetExceeded,
  MinorBudgetExceeded,
  FactorizationIncomplete,
  NotInCyclicGroup,
  Ramified,
  RankDeficient,
  NotMds,
  BadPrime,
  ZeroMinorPresent,
  PreconditionViolated,
  OutOfRange,
  InternalConsistency,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cycmds
