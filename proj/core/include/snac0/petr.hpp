#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "snac0/lipschitz.hpp"
#include "snac0/metric_space.hpp"
#include "snac0/rational.hpp"

namespace snac0 {

/// M_k: a maximal 1/2^k-separated subset. Nets are built greedily in point
/// order, each extending the previous one.
struct SeparatedNet {
  int k = 0;
  std::vector<PointIndex> points;
};

/// Size of A^n_{j,alpha} = M~_{n+1} cap B(x^j_alpha, 1/2^(k_{j+1}+1)).
struct BallCount {
  std::size_t level = 0;  // j
  PointIndex center = 0;  // x^j_alpha
  std::size_t size = 0;
};

enum class PetrCase { direct, first, a, b };

const char* petr_case_name(PetrCase which) noexcept;

/// One inductive step, producing L_n (n is 1-based).
struct PetrStep {
  std::size_t n = 0;
  PetrCase which = PetrCase::first;
  std::vector<PointIndex> working;   // M~_n
  std::vector<BallCount> balls;      // A^{n-1}_{j,alpha}, empty for n = 1
  Rational quota;                    // tau * |M~_n|
  std::optional<std::size_t> j0;    // case (b)
  std::optional<PointIndex> alpha0;  // case (b)
  std::vector<PointIndex> L;
  std::vector<PointIndex> N;
  Rational bound;                    // 1/2^(k_{n+1}+2)
};

struct PetrState {
  Rational tau;
  std::vector<SeparatedNet> nets;  // M_1, M_2, ... up to the first net equal to the space
  std::vector<int> k;              // selected levels k_1 < k_2 < ...
  std::vector<PetrStep> steps;
  std::vector<PointIndex> L;       // (union L_n) minus (union N_n), in point order
  Rational separation_floor;       // least level-wise bound used by the output
};

/// Finite version of the extraction: |M~_n| is the whole net M_{k_{n+1}}, and
/// case (b) fires when some A^n_{j,alpha} holds at least tau * |M~_{n+1}|
/// points, with j0 maximal. When M_1 is already the whole space the result is
/// that net. Throws InputError for levels = 0 or tau outside (0, 1],
/// PreconditionError when fewer than levels + 1 strictly growing nets exist,
/// and InternalError when the separation contract fails on the output.
PetrState petr_extract(const FiniteMetricSpace& space, std::size_t levels, const Rational& tau = Rational(1, 2));

/// Exhaustive check that every M_k is 1/2^k-separated and maximal.
bool nets_are_maximal(const FiniteMetricSpace& space, const PetrState& state);

/// d(L_n, L_j minus N_n) >= 1/2^(k_{j+1}+2) for all j < n. Returns the first
/// failing pair (p in L_n, q in L_j) if any.
std::optional<PointPair> separation_contract_failure(const FiniteMetricSpace& space, const PetrState& state);

struct DiscretenessReport {
  bool ok = true;
  std::optional<PointPair> violation;
  Rational bound;  // bound applied to the first point of the failing pair
};

/// Each x in `L` must be at distance >= 1/2^(k_{j+1}+2) from the rest of `L`,
/// j being the first level with x in L_j (the finest bound when x is in no
/// L_j). A direct-case state uses the net separation 1/2^k_1.
DiscretenessReport discreteness_check(const FiniteMetricSpace& space, std::span<const PointIndex> L,
                                      const PetrState& state);

}  // namespace snac0
