#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "snac0/rational.hpp"

namespace snac0::detail {

/// Scaled numerators stay below this bound so that sums of a few of them and
/// products of two of them fit comfortably in 128 bits.
inline constexpr std::int64_t kScaledLimit = std::int64_t{1} << 60;

/// values[i] == nums[i] / den, with one shared positive denominator.
struct ScaledIntegers {
  std::vector<std::int64_t> nums;
  std::int64_t den = 1;
};

/// Rewrites values over their least common denominator, or nullopt when that
/// denominator or any numerator leaves the 64-bit fast range.
std::optional<ScaledIntegers> scale_to_integers(std::span<const Rational> values);

}  // namespace snac0::detail
