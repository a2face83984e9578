#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pova/amount.hpp"
#include "pova/rational.hpp"
#include "pova/rigs.hpp"
#include "pova/schedule.hpp"

namespace pova {

enum class SimMode : std::uint8_t { Direct, Rigs, Mixed };

/// How agents alienate value: on-ledger transfers to the DAO treasury
/// (routed to beneficiaries), or burns to the non-spendable address (the
/// Proof-of-Burn contrast case).
enum class DepositKind : std::uint8_t { OnLedger, Burn };

enum class StrategyKind : std::uint8_t { DepositEveryN, BuyRigOnce, LapseAfter, Idle };

struct StrategySpec {
  StrategyKind kind = StrategyKind::Idle;
  u64 n = 1;            // DepositEveryN cadence
  Amount amount;        // deposit or rig purchase size
  Epoch lapse_epochs = 0; // LapseAfter: maintenance stops after this many epochs
};

struct AgentSpec {
  u64 id = 0;
  Amount initial_prime;
  StrategySpec strategy;
  bool reservation_pricing = false;
};

enum class PolicyKind : std::uint8_t { Charity, Fund, Budget, Lottery };

struct BudgetTargetSpec {
  std::string name; // resolved to a fresh beneficiary account at run setup
  Rational weight;
};

struct PolicySpec {
  PolicyKind kind = PolicyKind::Charity;
  u64 draw_interval_epochs = 1;
  std::vector<BudgetTargetSpec> targets;
};

struct ScenarioConstants {
  u64 k = 1; // rig hash units per Prime unit
  bool forbid_self_benefit = false;
  u64 epoch_minutes = 10;
  DepositKind deposit_kind = DepositKind::OnLedger;
};

struct RigSettings {
  u64 decay_factor_scaled = kFixed9Scale;
  Amount maintenance_fee;
};

/// Everything a run depends on. Identical (scenario, seed) pairs produce
/// byte-identical logs and metrics.
struct Scenario {
  SimMode mode = SimMode::Direct;
  std::optional<IssuanceSchedule> schedule; // required in Direct/Mixed
  std::optional<EmissionSchedule> emission; // required in Rigs/Mixed
  PolicySpec policy;
  Epoch epochs = 1;
  u64 seed = 0;
  std::vector<AgentSpec> agents;
  ScenarioConstants constants;
  RigSettings rig;
};

const char* to_string(SimMode mode) noexcept;
const char* to_string(StrategyKind kind) noexcept;
const char* to_string(PolicyKind kind) noexcept;
const char* to_string(DepositKind kind) noexcept;

/// Throws ScenarioInvalid naming the first violated constraint.
void validate_scenario(const Scenario& scenario);

/// Scenario files are either JSON or a key-value text format with
/// [section] and [[table-array]] headers; the two parse to the same thing.
Scenario scenario_from_json_text(const std::string& text);
Scenario scenario_from_kv_text(const std::string& text);
Scenario load_scenario_text(const std::string& text);
Scenario load_scenario_file(const std::string& path);

/// Canonical JSON form (amounts and ratios as decimal strings).
std::string scenario_to_json(const Scenario& scenario);

}  // namespace pova
