#include "cycmds/error.hpp"

namespace cycmds {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::MinorBudgetExceeded: return "MinorBudgetExceeded";
    case ErrorCode::FactorizationIncomplete: return "FactorizationIncomplete";
    case ErrorCode::NotInCyclicGroup: return "NotInCyclicGroup";
    case ErrorCode::Ramified: return "Ramified";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotMds: return "NotMds";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::ZeroMinorPresent: return "ZeroMinorPresent";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace cycmds
