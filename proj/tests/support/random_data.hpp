#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "snac0/constructions.hpp"
#include "snac0/lipschitz.hpp"
#include "snac0/metric_space.hpp"

namespace snac0::testing {

using Rng = std::mt19937_64;

/// Uniform on {lo, lo + 1/den, ..., hi}.
Rational grid_value(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t den);

/// Any square rational matrix on n points: mostly metrics, with a share of
/// broken triangles, asymmetric entries, zero distances and nonzero diagonals.
FiniteMetricSpace random_matrix(Rng& rng, std::size_t n);

/// Shortest-path closure of random edge weights in [1/4, 2]; always a metric.
FiniteMetricSpace random_metric(Rng& rng, std::size_t n);

/// Grid values rescaled to Lipschitz norm 1 (the base value is 0).
LipschitzFunction random_unit_function(Rng& rng, const SpacePtr& space);

/// k unit-norm members; witnesses declared as the first attainment pair.
FunctionFamily random_family(Rng& rng, const SpacePtr& space, std::size_t k);

/// Tents on k random parts glued at gap 4, one pair per part.
FunctionFamily random_tent_family(Rng& rng, std::size_t k, std::size_t part_size);

/// Adds a small amount to member i at the second point of member j's witness
/// pair, keeping norm 1. The family then fails the certificate at that pair.
FunctionFamily perturb_at_witness(const FunctionFamily& family, std::size_t i, std::size_t j);

}  // namespace snac0::testing
