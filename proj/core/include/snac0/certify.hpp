#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "snac0/lipschitz.hpp"

namespace snac0 {

/// f_member takes `value` at both points of the attainment pair of `owner`.
struct ConstancyEntry {
  std::size_t member = 0;
  std::size_t owner = 0;
  PointPair pair;
  Rational value;

  friend bool operator==(const ConstancyEntry&, const ConstancyEntry&) = default;
};

struct Certificate {
  std::vector<WitnessPair> attainment;  // one per member, ratio 1
  std::size_t checked_pairs = 0;
  std::vector<ConstancyEntry> constancy;
};

/// sum_i |f_i(p) - f_i(q)| = d(p, q) + excess with excess > 0.
struct Violation {
  PointPair pair;
  std::vector<int> signs;
  Rational excess;
};

using CertifyResult = std::variant<Certificate, Violation>;

/// Decides sum_i |f_i(p) - f_i(q)| <= d(p, q) over all pairs, which together
/// with unit norms is the isometric c0-basis property of the family.
/// Throws NotNormalizedError for a member whose norm is not exactly 1.
CertifyResult certify_c0(const FunctionFamily& family);

struct GridOracleResult {
  Rational max_ratio;
  CoefficientVector argmax;
};

/// Brute force: max over the grid of lip_norm(combine(lambda)) / max|lambda_i|.
GridOracleResult grid_oracle(const FunctionFamily& family, std::span<const CoefficientVector> grid);

/// {-1, 1}^k, or {-1, 0, 1}^k without the zero vector when with_zero is set.
std::vector<CoefficientVector> sign_grid(std::size_t k, bool with_zero = false);

struct ConstancyCounterexample {
  std::size_t member = 0;
  std::size_t owner = 0;
  PointPair pair;
  Rational at_p;
  Rational at_q;
};

using ConstancyResult = std::variant<std::vector<ConstancyEntry>, ConstancyCounterexample>;

/// For each member i and each other member j, checks that f_i is constant on
/// the declared witness pair of f_j. Throws InputError when a witness is
/// missing.
ConstancyResult constancy_check(const FunctionFamily& family);

}  // namespace snac0
