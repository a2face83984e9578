#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pova/error.hpp"

namespace pova {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Fixed-point scale shared by issuance ratios and rig decay factors:
/// a scaled value v represents v / 10^9.
inline constexpr u64 kFixed9Scale = 1'000'000'000;

u64 checked_add_u64(u64 a, u64 b);
u64 checked_mul_u64(u64 a, u64 b);

/// floor(num / den); den > 0.
inline u64 floor_div_u128(u128 num, u64 den) { return static_cast<u64>(num / den); }

/// Round num/den to the nearest integer, ties to even. den > 0 and the
/// result must fit in 64 bits.
u64 round_half_even_div(u128 num, u64 den);

/// floor(value * scaled / 10^9), the minting rule. Throws Overflow when the
/// result does not fit in 64 bits.
u64 mul_fixed9_floor(u64 value, u64 scaled);

/// Render a scaled fixed-point value as a decimal string with up to nine
/// fractional digits, trailing zeros trimmed ("1.0", "0.5", "0.333333333").
std::string format_fixed9(u64 scaled);

/// Parse a decimal string with at most nine fractional digits ("1", "1.0",
/// "0.333333333") into a scaled value. Throws ParseError on bad input.
u64 parse_fixed9(std::string_view text);

/// Parse an unsigned decimal integer; throws ParseError on bad input or overflow.
u64 parse_u64(std::string_view text);

/// splitmix64, the published reference generator. Fixed here because lottery
/// draws must reproduce bit-for-bit across languages and platforms.
struct SplitMix64 {
  u64 state = 0;

  constexpr u64 next() {
    u64 z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

/// First output of a splitmix64 stream seeded with `seed`.
constexpr u64 splitmix64_once(u64 seed) { return SplitMix64{seed}.next(); }

}  // namespace pova
