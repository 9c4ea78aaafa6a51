#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snac0/generators.hpp"
#include "snac0/lipschitz.hpp"

namespace snac0 {

/// Centers x and witnesses y of a tent family.
struct TentSpec {
  std::vector<PointPair> pairs;
};

/// Pairs (alpha, beta), alpha < beta, where d(x_a, x_b) < d(x_a, y_a) + d(x_b, y_b).
std::vector<std::pair<std::size_t, std::size_t>> tent_hypothesis_failures(const FiniteMetricSpace& space,
                                                                          const TentSpec& spec);

/// f_g(x) = max{0, d(x_g, y_g) - d(x, x_g)} - (the same at the base), with the
/// declared witness (x_g, y_g). Throws PreconditionError for degenerate pairs,
/// repeated centers, or hypothesis failures (all failing pairs listed).
FunctionFamily tent_family(SpacePtr space, const TentSpec& spec);

/// Tents over nearest-neighbor pairs (x, first minimizer of d(x, .)); the
/// case where every separation radius is attained.
FunctionFamily nearest_neighbor_tents(SpacePtr space, std::span<const PointIndex> centers);

struct SpikeSpec {
  std::vector<PointPair> pairs;  // (a_k, b_k)
  /// R(a_k), R(b_k); taken from the finite space when left empty.
  std::vector<Rational> radius_a;
  std::vector<Rational> radius_b;
};

struct SpikeData {
  Rational radius_a;
  Rational radius_b;
  Rational epsilon;  // R(a) + R(b) - d(a, b)
};

/// Resolves radii and epsilons and checks eps_k > 0, R(a_k) < eps_j / 2 for
/// j < k, and R(b_k) < R(a_k) / 2. Errors name the condition and index.
std::vector<SpikeData> spike_data(const FiniteMetricSpace& space, const SpikeSpec& spec);

/// f_k(a_k) = R(a_k) - eps_k/2, f_k(b_k) = -R(b_k) + eps_k/2, 0 elsewhere.
FunctionFamily spike_family(SpacePtr space, const SpikeSpec& spec);

struct Case1Selection {
  std::vector<std::string> centers;     // a_k
  std::vector<std::string> satellites;  // b_k
  std::vector<Rational> base_distances; // d(a_k, 0)
  std::vector<Rational> radii;          // R(a_k), not attained
  std::vector<Rational> margins;        // Delta_k = (d(a_k, 0) - R(a_k)) / 4
  std::size_t scanned = 0;              // candidates examined
};

struct Case1Result {
  Case1Selection selection;
  SpacePtr space;
  FunctionFamily family;
};

/// Greedy first-fit selection with d(a_k, 0) <= Delta_j for all j < k, a
/// satellite at slack exactly Delta_k, and tents on the resulting pairs over
/// the subspace made of the base, every scanned center with its canonical
/// satellite, and the chosen satellites.
/// Throws InsufficientSequenceError when candidates run out.
Case1Result case1_select(const SpaceGenerator& gen, std::size_t count, std::size_t max_candidates = 4096);

/// Checks d(a_n, a_m) >= d(a_n, 0) - d(a_m, 0) >= R(a_n) + 3 Delta_n >=
/// d(a_n, b_n) + d(a_m, b_m) for all n < m and that Delta_k strictly
/// decreases. Returns a description of the first failure, or an empty string.
std::string verify_case1_chain(const SpaceGenerator& gen, const Case1Selection& selection);

/// One tent per mark, with y the farthest other point within `closeness` of
/// the mark (ties by point order). Throws PreconditionError when a mark has no
/// point within closeness or the tent hypothesis fails.
FunctionFamily gamma_compose(SpacePtr space, std::span<const PointIndex> marks, const Rational& closeness);

}  // namespace snac0
