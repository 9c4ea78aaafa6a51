#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "snac0/lipschitz.hpp"
#include "snac0/metric_space.hpp"

namespace snac0::fixtures {

/// 8 clusters at mutual distance 1/2, each holding 8 cells at mutual distance
/// 1/8; a cell is a center plus 7 members at 3/32 from it and 1/16 from each
/// other (512 points). Net sizes along the greedy hierarchy are 8, 64, 512.
FiniteMetricSpace hierarchical();

/// Tree ultrametric on 8 x 8 x 8 leaves with scales 1/2, 1/8, 1/32 by first
/// differing digit.
FiniteMetricSpace ultrametric_hierarchy();

/// Four points at mutual distance 1; the first carries three children at 1/4
/// and a core of 16 points at 1/16, so one ball holds most of the finest net.
FiniteMetricSpace concentration();

/// Tents (p1, p2) on four copies of the three-point ud truncation glued at gap 3.
FunctionFamily tent_family();

/// Two unit-norm functions on the four-point ud truncation whose pairwise sum
/// exceeds d(p1, p3) by 1/24.
FunctionFamily violating_spikes();

/// Names accepted by by_name(): hierarchical, ultrametric, concentration.
const std::vector<std::string>& space_names();
FiniteMetricSpace by_name(std::string_view name);

}  // namespace snac0::fixtures
