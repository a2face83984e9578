#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pova/issuance.hpp"
#include "pova/ledger.hpp"
#include "pova/rigs.hpp"
#include "pova/routing.hpp"
#include "pova/scenario.hpp"
#include "pova/verification.hpp"

namespace pova {

// --- log annotations -------------------------------------------------------
// Interleaved with TransferEvents under one seq counter, these make the log
// replayable without the scenario: every piece of final state is derivable
// from the line that created it.

struct ProofNote {
  AlienationProof proof; // as submitted (Pending)
};

struct ProofStatusNote {
  u64 proof_id = 0;
  ProofStatus status = ProofStatus::Verified;
  RejectReason reason = RejectReason::None;
  std::optional<AccountId> miner; // consuming account, set on Consumed
};

struct RigNote {
  Rig rig; // as purchased
};

struct MaintenanceNote {
  u64 rig_id = 0;
  Epoch paid_through = 0;
};

struct RigStatusNote {
  u64 rig_id = 0;
  RigStatus status = RigStatus::Active;
};

struct PoolNote {
  Amount pool;
  Amount emitted;
  u64 active_rigs = 0;
};

struct RatioNote {
  Ratio ratio;
};

struct LotteryInitNote {
  Epoch next_draw_epoch = 0;
};

struct DrawNote {
  std::optional<AccountId> winner;
  Amount payout;
  Epoch next_draw_epoch = 0;
};

using NotePayload = std::variant<ProofNote, ProofStatusNote, RigNote, MaintenanceNote,
                                 RigStatusNote, PoolNote, RatioNote, LotteryInitNote, DrawNote>;

struct Annotation {
  Seq seq = 0;
  Epoch epoch = 0;
  NotePayload payload;
};

/// The full deterministic trace of a run: ledger events plus annotations,
/// totally ordered by a shared dense seq.
struct EventLog {
  std::vector<TransferEvent> transfers;
  std::vector<Annotation> annotations;

  u64 size() const { return static_cast<u64>(transfers.size() + annotations.size()); }
};

std::string to_jsonl(const Annotation& annotation);
void write_events_jsonl(std::ostream& out, const EventLog& log);

// --- per-epoch economics ----------------------------------------------------

struct MetricsRow {
  Epoch epoch = 0;
  Amount total_derivative_supply;
  Amount cumulative_prime_alienated;
  std::optional<Ratio> current_ratio;      // empty in pure Rigs mode
  Amount pool_emitted;
  u64 active_rigs = 0;
  std::optional<u64> min_cost_basis_scaled;  // 10^-9 fixed point; empty before any mint
  std::optional<u64> mean_cost_basis_scaled;
  Amount lottery_pot;
  // implied_floor_price column repeats min_cost_basis by definition.

  bool operator==(const MetricsRow&) const = default;
};

void write_metrics_csv(std::ostream& out, std::span<const MetricsRow> rows);

// --- final state -------------------------------------------------------------

struct HolderTotals {
  Amount prime_spent;        // consumed alienations plus maintenance
  Amount derivative_received; // direct mints plus rig emissions

  bool operator==(const HolderTotals&) const = default;
};

struct FinalState {
  std::map<AccountId, std::array<Amount, kAssetCount>> balances; // accounts touched by events
  Amount derivative_supply;
  Amount cumulative_prime_alienated;
  Amount forgone_emission;
  std::optional<Ratio> final_ratio;
  std::vector<Rig> rigs;
  std::optional<LotteryState> lottery;
  std::map<AccountId, HolderTotals> holders;

  bool operator==(const FinalState&) const = default;
};

/// An offer to sell one Derivative unit at `price` Prime per Derivative.
/// Reservation-pricing agents never ask below their own cost basis.
struct Ask {
  Epoch epoch = 0;
  AccountId holder;
  Rational price;
};

struct RunResult {
  EventLog log;
  std::vector<MetricsRow> metrics;
  FinalState final_state;
  std::vector<Ask> asks;
};

/// Execute a validated scenario. Fully deterministic in (scenario, seed):
/// agents act in ascending agent-id order, and each epoch runs the fixed
/// phases ingest proofs -> mints/purchases -> maintenance -> tick ->
/// routing/lottery -> adjust ratio -> metrics.
RunResult run_scenario(const Scenario& scenario);

/// Rebuild final state from a log alone. Throws CorruptLog on a seq gap or
/// any invariant breach, reporting the seq where the log went bad.
FinalState replay(const EventLog& log);

/// Parse an events.jsonl stream and replay it.
FinalState replay_jsonl(std::istream& in);

/// Minimum cost basis across holders: the implied floor price. Throws
/// NoHolders when nothing was minted.
Rational floor_price(const FinalState& state);

struct ReservationViolation {
  Epoch epoch = 0;
  AccountId holder;
  Rational ask_price;
  Rational basis;
};

/// List asks priced below the asker's own cost basis. Throws UnknownHolder
/// if an asker holds nothing.
std::vector<ReservationViolation> reservation_check(const FinalState& state,
                                                    std::span<const Ask> asks);

void write_summary_json(std::ostream& out, const Scenario& scenario, const RunResult& result);

}  // namespace pova
