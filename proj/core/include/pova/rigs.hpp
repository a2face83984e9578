#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pova/amount.hpp"
#include "pova/ledger.hpp"
#include "pova/routing.hpp"
#include "pova/verification.hpp"

namespace pova {

enum class RigStatus : std::uint8_t { Active, Lapsed };

const char* to_string(RigStatus status) noexcept;

/// A purchased emission entitlement: hashpower-like weight, optional decay,
/// optional per-epoch maintenance fee (the electricity-bill analogue).
struct Rig {
  u64 rig_id = 0;
  AccountId owner;
  u64 hashpower0 = 0;
  u64 decay_factor_scaled = kFixed9Scale; // in (0, 10^9]; 10^9 = flat
  Amount maintenance_fee;
  RigStatus status = RigStatus::Active;
  Epoch purchased_epoch = 0;
  Epoch paid_through_epoch = 0;

  bool operator==(const Rig&) const = default;
};

/// Derivative pool per epoch: E(t) = e0 >> (t / halving_interval), or a
/// constant e0 when no halving interval is set.
struct EmissionSchedule {
  Amount e0;
  std::optional<u64> halving_interval; // empty = never halves

  bool operator==(const EmissionSchedule&) const = default;
};

void validate_emission(const EmissionSchedule& schedule);
Amount emission_pool(const EmissionSchedule& schedule, Epoch epoch);

/// floor(hashpower0 * decay^age) by repeated fixed-point multiplication,
/// one floor per whole epoch of age. Pure; ignores rig status.
u64 effective_hashpower_at(const Rig& rig, Epoch epoch);

struct RigParams {
  u64 hashpower_per_prime = 1; // k: hash units per Prime unit alienated
  u64 decay_factor_scaled = kFixed9Scale;
  Amount maintenance_fee;
};

class RigRegistry {
 public:
  struct PurchaseOutcome {
    u64 rig_id = 0;
    std::vector<TransferEvent> events;
  };

  /// Consume a Verified proof and create a rig with hashpower0 =
  /// proof.amount * k. The alienated Prime is routed like a direct deposit.
  PurchaseOutcome purchase(Ledger& ledger, Router& router, ProofStore& proofs, u64 proof_id,
                           AccountId miner, const RigParams& params, Epoch epoch);

  struct MaintenanceOutcome {
    Epoch paid_through = 0;
    std::vector<TransferEvent> events; // empty for a zero fee
  };

  /// Pay one epoch of maintenance: fee moves owner -> DAO treasury and is
  /// routed onward as alienated value. Advances paid_through_epoch by one.
  MaintenanceOutcome pay_maintenance(Ledger& ledger, Router& router, AccountId payer,
                                     u64 rig_id, Epoch epoch);

  struct Emission {
    u64 rig_id = 0;
    AccountId owner;
    Amount minted;
  };

  struct TickOutcome {
    Amount pool;    // scheduled E(epoch)
    Amount emitted; // 0 when no rig was active (pool forgone, not banked)
    u64 active_rigs = 0;
    std::vector<u64> newly_lapsed;
    std::vector<u64> reactivated;
    std::vector<Emission> emissions; // ascending rig_id, zero shares omitted
  };

  /// Run one epoch: lapse rigs in arrears (fee-free rigs never lapse),
  /// reactivate rigs whose arrears were settled, then split E(epoch) across
  /// active rigs pro-rata to effective hashpower with largest-remainder
  /// apportionment (remainder ties to the lower rig_id). Mints the shares.
  /// Epochs must be ticked once each, in order.
  TickOutcome tick_epoch(Ledger& ledger, Epoch epoch, const EmissionSchedule& schedule);

  const Rig& rig(u64 rig_id) const;
  const std::vector<Rig>& rigs() const { return rigs_; }
  u64 size() const { return static_cast<u64>(rigs_.size()); }
  u64 active_count() const;

  /// Cached floor(h0 * d^age) for the last ticked epoch; equal to
  /// effective_hashpower_at by construction, maintained incrementally.
  u64 cached_hashpower(u64 rig_id) const;

  /// Replay path: recreate a rig without proof or payment plumbing.
  Rig& restore(const Rig& rig);
  void restore_tick(Epoch epoch) { next_tick_ = epoch; }

 private:
  Rig& require(u64 rig_id);

  std::vector<Rig> rigs_;
  std::vector<u64> effective_; // parallel to rigs_
  Epoch next_tick_ = 0;
};

}  // namespace pova
