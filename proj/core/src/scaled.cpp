#include "snac0/scaled.hpp"

#include <algorithm>

#include "joint_scale.hpp"
#include "rational_internal.hpp"

namespace snac0::detail {

std::optional<ScaledIntegers> scale_to_integers(std::span<const Rational> values) {
  std::int64_t lcm = 1;
  std::int64_t last_den = 1;
  for (const Rational& v : values) {
    if (!v.is_small()) return std::nullopt;
    const std::int64_t d = v.small_den();
    if (d == last_den || lcm % d == 0) continue;
    last_den = d;
    const auto g = static_cast<std::int64_t>(
        gcd_u64(static_cast<std::uint64_t>(lcm), static_cast<std::uint64_t>(d)));
    std::int64_t next = 0;
    if (__builtin_mul_overflow(lcm / g, d, &next) || next > kScaledLimit) return std::nullopt;
    lcm = next;
  }

  ScaledIntegers out;
  out.den = lcm;
  out.nums.reserve(values.size());
  for (const Rational& v : values) {
    std::int64_t n = 0;
    if (__builtin_mul_overflow(v.small_num(), lcm / v.small_den(), &n)) return std::nullopt;
    if (n > kScaledLimit || n < -kScaledLimit) return std::nullopt;
    out.nums.push_back(n);
  }
  return out;
}

std::optional<JointScale> joint_scale(const FiniteMetricSpace& space, std::span<const Rational> values) {
  const ScaledIntegers* dist = space.scaled_distances();
  if (dist == nullptr) return std::nullopt;
  std::optional<ScaledIntegers> vals = scale_to_integers(values);
  if (!vals) return std::nullopt;

  const auto g = static_cast<std::int64_t>(
      gcd_u64(static_cast<std::uint64_t>(dist->den), static_cast<std::uint64_t>(vals->den)));
  std::int64_t den = 0;
  if (__builtin_mul_overflow(dist->den / g, vals->den, &den) || den > kScaledLimit) return std::nullopt;

  JointScale out;
  out.base = dist;
  out.den = den;
  out.dist_factor = den / dist->den;
  std::int64_t max_dist = 0;
  for (std::int64_t d : dist->nums) max_dist = std::max(max_dist, d);
  std::int64_t scaled_max = 0;
  if (__builtin_mul_overflow(max_dist, out.dist_factor, &scaled_max) || scaled_max > kScaledLimit) {
    return std::nullopt;
  }
  const std::int64_t value_factor = den / vals->den;
  out.values = std::move(vals->nums);
  for (std::int64_t& v : out.values) {
    if (__builtin_mul_overflow(v, value_factor, &v) || v > kScaledLimit || v < -kScaledLimit) return std::nullopt;
  }
  return out;
}

}  // namespace snac0::detail
