#pragma once

#include <stdexcept>
#include <string>

namespace pova {

/// Every failure the engine can signal. Operations either succeed or throw
/// an Error carrying one of these codes; no operation leaves partial state.
enum class ErrorCode {
  InvalidAmount,
  Overflow,
  InsufficientFunds,
  NonSpendable,
  UnknownAccount,
  InvalidSchedule,
  ProofNotVerified,
  ProofAlreadyConsumed,
  ZeroMint,
  NoMints,
  NotOwner,
  UnknownRig,
  EpochOutOfOrder,
  ValueLoop,
  InvalidPolicy,
  WrongEpoch,
  NoHolders,
  UnknownHolder,
  ScenarioInvalid,
  CorruptLog,
  ParseError,
  IoError,
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

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pova
