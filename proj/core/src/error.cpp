#include "pova/error.hpp"

namespace pova {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidAmount: return "InvalidAmount";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InsufficientFunds: return "InsufficientFunds";
    case ErrorCode::NonSpendable: return "NonSpendable";
    case ErrorCode::UnknownAccount: return "UnknownAccount";
    case ErrorCode::InvalidSchedule: return "InvalidSchedule";
    case ErrorCode::ProofNotVerified: return "ProofNotVerified";
    case ErrorCode::ProofAlreadyConsumed: return "ProofAlreadyConsumed";
    case ErrorCode::ZeroMint: return "ZeroMint";
    case ErrorCode::NoMints: return "NoMints";
    case ErrorCode::NotOwner: return "NotOwner";
    case ErrorCode::UnknownRig: return "UnknownRig";
    case ErrorCode::EpochOutOfOrder: return "EpochOutOfOrder";
    case ErrorCode::ValueLoop: return "ValueLoop";
    case ErrorCode::InvalidPolicy: return "InvalidPolicy";
    case ErrorCode::WrongEpoch: return "WrongEpoch";
    case ErrorCode::NoHolders: return "NoHolders";
    case ErrorCode::UnknownHolder: return "UnknownHolder";
    case ErrorCode::ScenarioInvalid: return "ScenarioInvalid";
    case ErrorCode::CorruptLog: return "CorruptLog";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace pova
