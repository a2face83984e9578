#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "pova/numeric.hpp"

namespace pova {

/// The two balances every account carries. Prime Assets are what miners give
/// up; Derivative Tokens are what the issuer mints against that alienation.
enum class AssetKind : std::uint8_t { Prime, Derivative };

inline constexpr int kAssetCount = 2;

const char* to_string(AssetKind kind) noexcept;

/// Exact integer quantity in minor units. No fractions, no negatives;
/// arithmetic overflow is an error, never wraparound.
struct Amount {
  u64 minor = 0;

  constexpr auto operator<=>(const Amount&) const = default;
  constexpr bool is_zero() const { return minor == 0; }
};

inline constexpr Amount kZeroAmount{0};

Amount checked_add(Amount a, Amount b);

/// a - b; throws InsufficientFunds when b > a.
Amount checked_sub(Amount a, Amount b);

std::string to_string(Amount amount);
Amount amount_from_string(std::string_view text);

}  // namespace pova
