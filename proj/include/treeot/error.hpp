#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treeot {

enum class ErrorCode {
  NotConnected,
  HasCycle,
  DuplicateEdge,
  UnknownVertex,
  NegativeMass,
  MassMismatch,
  NotZeroSum,
  TooLarge,
  InfeasiblePotential,
  InvalidParams,
  TruncationTooSmall,
  NonUnitDivisor,
  NonSquareConstantTerm,
  InvalidAlpha,
  OrderExceeded,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace treeot
