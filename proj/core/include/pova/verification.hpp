#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "pova/amount.hpp"
#include "pova/ledger.hpp"

namespace pova {

enum class ProofKind : std::uint8_t { OnLedger, FiatRecord, Burn };

enum class ProofStatus : std::uint8_t { Pending, Verified, Rejected, Consumed };

enum class RejectReason : std::uint8_t {
  None,
  NoMatchingEvent,
  WrongEventKind,
  NotToTreasury,
  NotBurnAddress,
  PayerMismatch,
  AmountMismatch,
  EpochMismatch,
  AlreadyClaimed,
  MalformedRecord,
  DuplicateExternalRef,
};

const char* to_string(ProofKind kind) noexcept;
const char* to_string(ProofStatus status) noexcept;
const char* to_string(RejectReason reason) noexcept;

/// Evidence that Prime value was irreversibly given up. A proof moves
/// Pending -> Verified -> Consumed, or Pending -> Rejected(reason); each
/// underlying transfer, burn, or fiat record backs at most one Consumed
/// proof, which is what makes minting at-most-once.
struct AlienationProof {
  u64 proof_id = 0;
  ProofKind kind = ProofKind::OnLedger;
  AccountId payer;            // OnLedger / Burn
  std::string external_payer; // FiatRecord
  std::string external_ref;   // FiatRecord dedup key
  Amount amount;
  Epoch epoch = 0;
  std::optional<Seq> cited_seq; // the ledger event this proof claims
  ProofStatus status = ProofStatus::Pending;
  RejectReason reject_reason = RejectReason::None;
};

/// One ingested bank-record line: {external_ref, payer, amount, currency,
/// timestamp}. Records are trusted once well-formed; the declared fiat
/// currency maps 1:1 onto Prime minor units.
struct FiatRecord {
  std::string external_ref;
  std::string payer;
  Amount amount;
  std::string currency;
  std::int64_t timestamp = 0;
};

struct IngestError {
  std::size_t line = 0;
  RejectReason reason = RejectReason::MalformedRecord;
  std::string detail;
};

class ProofStore {
 public:
  /// Submit a Pending proof citing a ledger event.
  AlienationProof& submit_onledger(AccountId payer, Amount amount, Epoch epoch, Seq cited_seq);
  AlienationProof& submit_burn(AccountId payer, Amount amount, Epoch epoch, Seq cited_seq);

  /// Verified iff the cited event is a Prime transfer payer -> DAO treasury
  /// with matching amount and epoch, not claimed by any other proof.
  /// Calling on a non-Pending proof returns the current status unchanged.
  ProofStatus verify_onledger(u64 proof_id, const Ledger& ledger);

  /// Verified iff the cited event is a Prime burn by payer with matching
  /// amount and epoch, unclaimed. A transfer to a normal account cited here
  /// rejects with NotBurnAddress.
  ProofStatus verify_burn(u64 proof_id, const Ledger& ledger);

  /// Verified -> Consumed. Throws ProofNotVerified on Pending/Rejected and
  /// ProofAlreadyConsumed on a second consume.
  ProofStatus consume(u64 proof_id);

  struct IngestResult {
    std::vector<u64> created; // proof ids, already Verified
    std::vector<IngestError> errors;
  };

  /// Read JSON Lines fiat records. Malformed or duplicate lines become error
  /// entries, never exceptions; well-formed new records become Verified
  /// proofs keyed by external_ref.
  IngestResult ingest_fiat_records(std::istream& in);

  AlienationProof& proof(u64 proof_id);
  const AlienationProof& proof(u64 proof_id) const;
  u64 size() const { return static_cast<u64>(proofs_.size()); }
  const std::vector<AlienationProof>& proofs() const { return proofs_; }

  /// Register an externally created proof (replay path). Keeps claim and
  /// dedup bookkeeping consistent with the original run.
  AlienationProof& restore(const AlienationProof& proof);

 private:
  AlienationProof& submit(ProofKind kind, AccountId payer, Amount amount, Epoch epoch,
                          std::optional<Seq> cited_seq);
  ProofStatus reject(AlienationProof& proof, RejectReason reason);

  std::vector<AlienationProof> proofs_;
  std::unordered_set<u64> claimed_seqs_;
  std::unordered_set<std::string> seen_external_refs_;
};

}  // namespace pova
