#pragma once

#include <map>
#include <vector>

#include "pova/ledger.hpp"
#include "pova/rational.hpp"
#include "pova/routing.hpp"
#include "pova/schedule.hpp"
#include "pova/verification.hpp"

namespace pova {

/// Per-miner alienation and mint totals; the inputs of a cost basis.
struct MinerTotals {
  Amount prime_in;
  Amount derivative_out;

  bool operator==(const MinerTotals&) const = default;
};

/// Direct-issuance mode: converts verified Prime alienation into Derivative
/// mints at the schedule's publicly predictable ratio.
///
/// The frozen fixed-point ratio is re-evaluated before the first mint of
/// each epoch and after every mint that changes the schedule's driving
/// counter, so minting itself stays exact-integer. Adjustments never raise
/// the ratio.
class IssuanceEngine {
 public:
  explicit IssuanceEngine(IssuanceSchedule schedule);

  Ratio current_ratio() const { return current_ratio_; }
  Epoch epoch() const { return epoch_; }
  Amount cumulative_prime_in() const { return cumulative_prime_in_; }
  Amount cumulative_derivative_out() const { return cumulative_derivative_out_; }
  u64 miner_count() const { return static_cast<u64>(miners_.size()); }
  const std::map<AccountId, MinerTotals>& miners() const { return miners_; }
  const IssuanceSchedule& schedule() const { return schedule_; }

  /// Advance the epoch counter and apply the pre-first-mint adjustment.
  /// Epochs must be visited in non-decreasing order.
  Ratio begin_epoch(Epoch epoch);

  /// Re-evaluate the schedule at the current counters. The result never
  /// exceeds the previous ratio.
  Ratio adjust_ratio();

  struct MintOutcome {
    Amount minted;
    std::vector<TransferEvent> events; // mint followed by any route events
  };

  /// Consume a Verified proof and mint floor(amount * ratio) to the miner.
  /// OnLedger alienations are then routed out of the DAO treasury; burn
  /// proofs leave the Prime where it is (destroyed, the Proof-of-Burn
  /// contrast); fiat proofs materialize the Prime as an external deposit to
  /// the treasury before routing. Throws ZeroMint (refusing the deposit,
  /// routing nothing and consuming nothing) when the mint would be zero.
  MintOutcome mint_direct(Ledger& ledger, Router& router, ProofStore& proofs, u64 proof_id,
                          AccountId miner);

  /// Prime alienated per Derivative minted for this miner, exact. Throws
  /// NoMints for accounts that never minted here.
  Rational cost_basis(AccountId miner) const;

 private:
  ScheduleCounters counters() const;

  IssuanceSchedule schedule_;
  Epoch epoch_ = 0;
  Amount cumulative_prime_in_;
  Amount cumulative_derivative_out_;
  std::map<AccountId, MinerTotals> miners_;
  Ratio current_ratio_;
};

}  // namespace pova
