#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pova/amount.hpp"
#include "pova/error.hpp"

namespace pova {

using Epoch = std::uint64_t;
using Seq = std::uint64_t;

struct AccountId {
  u64 value = 0;

  constexpr auto operator<=>(const AccountId&) const = default;
};

/// Reserved accounts, allocated before any user account. Ordinary ids are
/// handed out densely starting at kFirstUserAccount.
inline constexpr AccountId kDaoTreasury{0};
inline constexpr AccountId kBurnAccount{1};
inline constexpr AccountId kCharityAccount{2};
inline constexpr AccountId kFundAccount{3};
inline constexpr AccountId kLotteryPotAccount{4};
inline constexpr u64 kFirstUserAccount = 5;

enum class EventKind : std::uint8_t {
  Transfer,
  Mint,
  ExternalDeposit,
  Burn,
  Route,
  Maintenance,
  LotteryPayout,
};

const char* to_string(EventKind kind) noexcept;

/// One ledger mutation. Mint and ExternalDeposit create supply and record
/// `from == to` (there is no source account); every other kind moves value
/// between two accounts. `amount` is strictly positive in every event.
struct TransferEvent {
  Seq seq = 0;
  Epoch epoch = 0;
  AccountId from;
  AccountId to;
  AssetKind asset = AssetKind::Prime;
  Amount amount;
  EventKind kind = EventKind::Transfer;

  bool operator==(const TransferEvent&) const = default;
};

/// JSON Lines form, fields in declaration order; amounts as decimal strings.
std::string to_jsonl(const TransferEvent& event);

/// Exact-integer double-entry ledger over the two asset kinds, with an
/// append-only event log. Nothing ever leaves the ledger: burning moves
/// Prime to the non-spendable burn account instead of destroying it, so
/// burned and routed totals stay comparable.
///
/// Single-writer: one logical thread mutates a Ledger at a time.
class Ledger {
 public:
  Ledger();

  /// Fresh account with zero balances. Ids are dense after the reserved block.
  AccountId open_account();

  /// Supply entering from outside (a miner funding a wallet, or a verified
  /// fiat credit materializing as Prime).
  TransferEvent external_deposit(AccountId to, AssetKind asset, Amount amount, Epoch epoch);

  TransferEvent transfer(AccountId from, AccountId to, AssetKind asset, Amount amount,
                         Epoch epoch);

  /// Create Derivative supply. Callers are the issuance and rig modules;
  /// nothing else mints.
  TransferEvent mint(AccountId to, Amount amount, Epoch epoch);

  /// Move to the burn account. Any later transfer out of it fails NonSpendable.
  TransferEvent burn(AccountId from, AssetKind asset, Amount amount, Epoch epoch);

  /// A move recorded under a specific kind (Route, Maintenance, LotteryPayout).
  /// Same checks as transfer.
  TransferEvent transfer_as(EventKind kind, AccountId from, AccountId to, AssetKind asset,
                            Amount amount, Epoch epoch);

  Amount balance(AccountId account, AssetKind asset) const;

  bool account_exists(AccountId account) const;
  u64 account_count() const { return static_cast<u64>(accounts_.size()); }

  /// Total supply ever created per asset (mints plus external deposits).
  Amount total_created(AssetKind asset) const;

  /// Sum of live balances per asset; equals total_created by conservation.
  Amount sum_balances(AssetKind asset) const;

  const std::vector<TransferEvent>& events() const { return events_; }

  /// Reserve the next seq for a non-ledger log annotation. The event log
  /// stays strictly increasing in seq; the simulation log owns the gap.
  Seq allocate_annotation_seq() { return next_seq_++; }

  Seq next_seq() const { return next_seq_; }

 private:
  using Balances = std::array<Amount, kAssetCount>;

  Balances& require(AccountId account);
  const Balances& require(AccountId account) const;
  TransferEvent move(EventKind kind, AccountId from, AccountId to, AssetKind asset,
                     Amount amount, Epoch epoch);
  TransferEvent append(EventKind kind, AccountId from, AccountId to, AssetKind asset,
                       Amount amount, Epoch epoch);

  std::map<AccountId, Balances> accounts_;
  std::vector<TransferEvent> events_;
  Seq next_seq_ = 0;
  u64 next_account_ = kFirstUserAccount;
  std::array<Amount, kAssetCount> total_created_{};
};

}  // namespace pova
