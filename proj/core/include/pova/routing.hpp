#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pova/amount.hpp"
#include "pova/ledger.hpp"
#include "pova/rational.hpp"

namespace pova {

/// Routing policies decide where alienated Prime goes once it reaches the
/// DAO treasury. Outside the lottery, routed value must never return to its
/// alienator; that loop would void the value creation the protocol rests on.
struct CharitySink {};

struct FundAccumulate {};

struct BudgetTarget {
  AccountId account;
  Rational weight;
};

/// Weights are exact rationals summing to 1; splits use largest-remainder
/// apportionment so every routed amount is distributed in full.
struct BudgetSplit {
  std::vector<BudgetTarget> targets;
};

struct LotteryPot {
  u64 draw_interval_epochs = 1;
};

using RoutePolicy = std::variant<CharitySink, FundAccumulate, BudgetSplit, LotteryPot>;

const char* policy_kind_name(const RoutePolicy& policy) noexcept;

/// Throws InvalidPolicy on empty splits, zero weights, weights not summing
/// to 1, duplicate targets, or a zero draw interval.
void validate_policy(const RoutePolicy& policy);

struct DrawRecord {
  Epoch epoch = 0;
  std::optional<AccountId> winner; // empty when no one was eligible
  Amount payout;

  bool operator==(const DrawRecord&) const = default;
};

struct LotteryState {
  Amount pot;
  Epoch next_draw_epoch = 0;
  std::vector<DrawRecord> history;

  bool operator==(const LotteryState&) const = default;
};

/// Deterministic winner index over an ordered eligible list: first output of
/// splitmix64 seeded with (seed XOR epoch), reduced mod the list size.
u64 lottery_winner_index(u64 seed, Epoch epoch, u64 eligible_count);

/// One claim in a largest-remainder split: exact share = total * num / den.
struct ApportionClaim {
  u64 tie_key = 0; // lower key wins remainder ties
  u64 num = 0;
  u64 den = 1;
};

/// Split `total` into integer shares summing to exactly `total`, one per
/// claim, each within one unit of its exact share. Requires the exact shares
/// to sum to `total` (proportional weights or weights summing to 1).
std::vector<u64> largest_remainder_split(u64 total, std::span<const ApportionClaim> claims);

class Router {
 public:
  explicit Router(RoutePolicy policy);

  /// Move `amount` of Prime out of the DAO treasury to the policy targets
  /// (or the lottery pot). Throws ValueLoop if a target equals source_miner;
  /// the lottery is the documented exception.
  std::vector<TransferEvent> route(Ledger& ledger, Amount amount, AccountId source_miner,
                                   Epoch epoch);

  bool is_lottery() const;
  bool draw_due(Epoch epoch) const;

  struct DrawOutcome {
    std::optional<AccountId> winner;
    Amount payout;
    std::optional<TransferEvent> event;
  };

  /// Pay the whole pot to one of `eligible` (ordered, caller-defined). With
  /// an empty list the pot carries over. Throws WrongEpoch unless epoch is
  /// exactly the scheduled draw epoch.
  DrawOutcome draw_lottery(Ledger& ledger, std::span<const AccountId> eligible, Epoch epoch,
                           u64 seed);

  const RoutePolicy& policy() const { return policy_; }
  const LotteryState& lottery() const { return lottery_; }

  /// Replay path: overwrite lottery bookkeeping from the log.
  void restore_lottery(const LotteryState& state) { lottery_ = state; }

 private:
  RoutePolicy policy_;
  LotteryState lottery_;
};

}  // namespace pova
