#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "snac0/metric_space.hpp"
#include "snac0/scaled.hpp"

namespace snac0::detail {

/// Distances and function values over one shared denominator, all bounded by
/// kScaledLimit. A scaled distance is base->nums[i] * dist_factor.
struct JointScale {
  const ScaledIntegers* base = nullptr;
  std::int64_t dist_factor = 1;
  std::int64_t den = 1;
  std::vector<std::int64_t> values;

  std::int64_t distance(std::size_t flat_index) const noexcept { return base->nums[flat_index] * dist_factor; }
};

std::optional<JointScale> joint_scale(const FiniteMetricSpace& space, std::span<const Rational> values);

}  // namespace snac0::detail
