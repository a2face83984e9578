#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "pova/amount.hpp"
#include "pova/ledger.hpp"

namespace pova {

/// Derivative units minted per Prime unit, as a 10^-9 fixed-point value.
struct Ratio {
  u64 scaled = 0;

  constexpr auto operator<=>(const Ratio&) const = default;
};

inline constexpr Ratio kUnitRatio{kFixed9Scale};

std::string to_string(Ratio ratio);

/// The counters a schedule may read. All are monotone non-decreasing over a
/// run, which is what makes every schedule variant non-increasing in time.
struct ScheduleCounters {
  Epoch epoch = 0;
  Amount cumulative_prime_in;
  u64 miner_count = 0;
};

struct ConstantSchedule {
  Ratio r0;
};

/// Halves the ratio every interval_epochs epochs (integer halving of the
/// scaled value). The 2016-epoch default elsewhere mirrors the difficulty
/// retarget cadence of the best-known proof-of-work chain.
struct HalvingSchedule {
  Ratio r0;
  u64 interval_epochs = 1;
};

/// ratio(s) = 1 / (a + b * ln(1 + s/s0)) with s the cumulative Prime influx.
/// Evaluated in binary64 and rounded half-even onto the fixed-point grid at
/// adjustment points only; all minting uses the frozen fixed-point ratio.
struct LogCostSchedule {
  double a = 1.0;
  double b = 0.0;
  Amount s0;
};

/// ratio(m) = r0 / max(1, m) with m the count of distinct miners so far.
struct ParticipantScaledSchedule {
  Ratio r0;
};

/// ratio(s) = r0 * s_ref / (s_ref + s) with s the cumulative Prime influx.
struct InfluxScaledSchedule {
  Ratio r0;
  Amount s_ref;
};

using IssuanceSchedule = std::variant<ConstantSchedule, HalvingSchedule, LogCostSchedule,
                                      ParticipantScaledSchedule, InfluxScaledSchedule>;

/// Factories validate parameters; invalid parameters are a construction
/// error (InvalidSchedule), never a runtime error.
IssuanceSchedule make_constant(Ratio r0);
IssuanceSchedule make_halving(Ratio r0, u64 interval_epochs);
IssuanceSchedule make_log_cost(double a, double b, Amount s0);
IssuanceSchedule make_participant_scaled(Ratio r0);
IssuanceSchedule make_influx_scaled(Ratio r0, Amount s_ref);

/// Throws InvalidSchedule if any parameter is out of range.
void validate_schedule(const IssuanceSchedule& schedule);

/// Pure evaluation at the given counters, rounded half-even to 10^-9.
Ratio eval_schedule(const IssuanceSchedule& schedule, const ScheduleCounters& counters);

const char* schedule_kind_name(const IssuanceSchedule& schedule) noexcept;

}  // namespace pova
