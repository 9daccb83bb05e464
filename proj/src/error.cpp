#include "treeot/error.hpp"

namespace treeot {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::HasCycle: return "HasCycle";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::MassMismatch: return "MassMismatch";
    case ErrorCode::NotZeroSum: return "NotZeroSum";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InfeasiblePotential: return "InfeasiblePotential";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::NonUnitDivisor: return "NonUnitDivisor";
    case ErrorCode::NonSquareConstantTerm: return "NonSquareConstantTerm";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace treeot
