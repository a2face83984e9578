#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "pova/numeric.hpp"

namespace pova {

/// Exact non-negative rational, always stored reduced with den > 0.
/// Used for budget-split weights, cost bases, and reservation prices,
/// where flooring or binary rounding would leak value.
struct Rational {
  u64 num = 0;
  u64 den = 1;

  static Rational make(u64 num, u64 den);

  bool operator==(const Rational&) const = default;

  bool is_zero() const { return num == 0; }
};

/// Cross-multiplied exact comparison (128-bit intermediates).
std::strong_ordering compare(const Rational& a, const Rational& b);

inline bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
inline bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

/// Exact sum; throws Overflow when the reduced result exceeds 64 bits.
Rational rational_add(const Rational& a, const Rational& b);

/// Round to the 10^-9 grid, ties to even.
u64 to_fixed9_half_even(const Rational& r);

/// "num/den" form, e.g. "3/5"; whole numbers render without the denominator.
std::string to_string(const Rational& r);

/// Accepts "3/5", "2", or a fixed-point decimal like "0.6".
Rational rational_from_string(std::string_view text);

}  // namespace pova
