#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "snac0/rational.hpp"

namespace snac0 {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

/// Bridges Rational and GMP for code inside the core library.
struct RationalAccess {
  static mpq_class to_mpq(const Rational& value);
  static Rational from_mpq(const mpq_class& value);
  /// Builds num/den from 128-bit parts; den must be nonzero.
  static Rational from_i128(i128 num, i128 den);
  /// Inline value from an already reduced pair with den > 0.
  static Rational raw_small(std::int64_t num, std::int64_t den) noexcept {
    Rational out;
    out.num_ = num;
    out.den_ = den;
    return out;
  }
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;
u128 gcd_u128(u128 a, u128 b) noexcept;

inline bool fits_i64(i128 v) noexcept {
  return v > static_cast<i128>(INT64_MIN) && v <= static_cast<i128>(INT64_MAX);
}

}  // namespace snac0
