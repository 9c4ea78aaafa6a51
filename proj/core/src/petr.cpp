#include "snac0/petr.hpp"

#include <algorithm>
#include <string>

#include "snac0/error.hpp"

namespace snac0 {

const char* petr_case_name(PetrCase which) noexcept {
  switch (which) {
    case PetrCase::direct: return "direct";
    case PetrCase::first: return "first";
    case PetrCase::a: return "a";
    case PetrCase::b: return "b";
  }
  return "?";
}

namespace {

constexpr int kMaxLevel = 4096;

std::vector<SeparatedNet> build_nets(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  for (PointIndex p = 0; p < n; ++p) {
    for (PointIndex q = p + 1; q < n; ++q) {
      if (space.distance(p, q).sign() <= 0) {
        throw PreconditionError("points " + space.label(p) + " and " + space.label(q) + " are at distance 0");
      }
    }
  }
  std::vector<SeparatedNet> nets;
  std::vector<PointIndex> current;
  for (int k = 1; k <= kMaxLevel; ++k) {
    const Rational r = Rational::pow2(-k);
    std::vector<bool> in(n, false);
    for (PointIndex p : current) in[p] = true;
    for (PointIndex p = 0; p < n; ++p) {
      if (in[p]) continue;
      const bool far = std::all_of(current.begin(), current.end(),
                                   [&](PointIndex q) { return space.distance(p, q) >= r; });
      if (far) {
        current.push_back(p);
        in[p] = true;
      }
    }
    nets.push_back({k, current});
    if (current.size() == n) return nets;
  }
  throw InternalError("nets did not reach the whole space");
}

std::vector<PointIndex> sorted(std::vector<PointIndex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Rational distance_to_set(const FiniteMetricSpace& space, PointIndex x, const std::vector<PointIndex>& set) {
  Rational best;
  bool first = true;
  for (PointIndex y : set) {
    if (first || space.distance(x, y) < best) best = space.distance(x, y);
    first = false;
  }
  return best;
}

}  // namespace

PetrState petr_extract(const FiniteMetricSpace& space, std::size_t levels, const Rational& tau) {
  if (levels == 0) throw InputError("petr extraction needs levels >= 1");
  if (tau.sign() <= 0 || tau > Rational(1)) throw InputError("tau must lie in (0, 1], got " + tau.str());
  if (space.size() < 2) throw InputError("petr extraction needs at least two points");

  PetrState state;
  state.tau = tau;
  state.nets = build_nets(space);

  if (state.nets.front().points.size() == space.size()) {
    PetrStep step;
    step.n = 1;
    step.which = PetrCase::direct;
    step.working = state.nets.front().points;
    step.L = sorted(step.working);
    step.quota = tau * Rational(static_cast<std::int64_t>(step.working.size()));
    step.bound = Rational(1, 2);
    state.k = {1};
    state.L = step.L;
    state.separation_floor = step.bound;
    state.steps.push_back(std::move(step));
    return state;
  }

  // Greedy subsequence with strictly growing net sizes.
  std::vector<const SeparatedNet*> chosen{&state.nets.front()};
  for (const SeparatedNet& net : state.nets) {
    if (chosen.size() == levels + 1) break;
    if (net.points.size() > chosen.back()->points.size()) chosen.push_back(&net);
  }
  if (chosen.size() < levels + 1) {
    throw PreconditionError("net sizes increase only " + std::to_string(chosen.size() - 1) + " times; " +
                            std::to_string(levels) + " levels need " + std::to_string(levels) + " increases");
  }
  for (const SeparatedNet* net : chosen) state.k.push_back(net->k);
  auto bound_at = [&](std::size_t j) { return Rational::pow2(-(state.k[j] + 2)); };  // j = level n (1-based)

  PetrStep first;
  first.n = 1;
  first.which = PetrCase::first;
  first.working = chosen[1]->points;
  first.L = sorted(first.working);
  first.quota = tau * Rational(static_cast<std::int64_t>(first.working.size()));
  first.bound = bound_at(1);
  state.steps.push_back(std::move(first));

  for (std::size_t n = 1; n < levels; ++n) {
    PetrStep step;
    step.n = n + 1;
    step.working = chosen[n + 1]->points;
    step.quota = tau * Rational(static_cast<std::int64_t>(step.working.size()));
    step.bound = bound_at(n + 1);

    // A^n_{j,alpha} for j <= n and alpha over M~_j.
    std::vector<std::vector<PointIndex>> balls;
    std::optional<std::size_t> hit;  // index into balls of (j0, alpha0)
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational radius = Rational::pow2(-(state.k[j] + 1));
      for (PointIndex alpha : state.steps[j - 1].working) {
        std::vector<PointIndex> a;
        for (PointIndex w : step.working) {
          if (space.distance(w, alpha) < radius) a.push_back(w);
        }
        const bool heavy = Rational(static_cast<std::int64_t>(a.size())) >= step.quota;
        if (heavy && (!hit || step.balls[*hit].level < j)) hit = balls.size();
        step.balls.push_back({j, alpha, a.size()});
        balls.push_back(std::move(a));
      }
    }

    std::vector<bool> covered(space.size(), false);
    const std::size_t j0 = hit ? step.balls[*hit].level : 0;
    for (std::size_t b = 0; b < balls.size(); ++b) {
      if (step.balls[b].level > j0) {
        for (PointIndex p : balls[b]) covered[p] = true;
      }
    }
    const std::vector<PointIndex>& source = hit ? balls[*hit] : step.working;
    for (PointIndex p : source) {
      if (!covered[p]) step.L.push_back(p);
    }
    step.L = sorted(std::move(step.L));

    if (hit) {
      step.which = PetrCase::b;
      step.j0 = j0;
      step.alpha0 = step.balls[*hit].center;
      for (std::size_t i = 1; i <= j0; ++i) {
        std::size_t near = 0;
        for (PointIndex x : state.steps[i - 1].L) {
          if (!step.L.empty() && distance_to_set(space, x, step.L) < bound_at(i)) {
            step.N.push_back(x);
            ++near;
            if (i == j0 && x != *step.alpha0) {
              throw InternalError("case (b): a point of L_j0 other than x_alpha0 is close to L_" +
                                  std::to_string(n + 1));
            }
          }
        }
        if (near > 1) {
          throw InternalError("case (b): " + std::to_string(near) + " points of L_" + std::to_string(i) +
                              " are close to L_" + std::to_string(n + 1));
        }
      }
      step.N = sorted(std::move(step.N));
    } else {
      step.which = PetrCase::a;
    }
    state.steps.push_back(std::move(step));
  }

  std::vector<bool> in_l(space.size(), false);
  std::vector<bool> in_n(space.size(), false);
  for (const PetrStep& step : state.steps) {
    for (PointIndex p : step.L) in_l[p] = true;
    for (PointIndex p : step.N) in_n[p] = true;
  }
  for (PointIndex p = 0; p < space.size(); ++p) {
    if (in_l[p] && !in_n[p]) state.L.push_back(p);
  }
  state.separation_floor = state.steps.back().bound;

  if (auto bad = separation_contract_failure(space, state)) {
    throw InternalError("separation contract fails at (" + space.label(bad->p) + ", " + space.label(bad->q) + ")");
  }
  return state;
}

bool nets_are_maximal(const FiniteMetricSpace& space, const PetrState& state) {
  for (const SeparatedNet& net : state.nets) {
    const Rational r = Rational::pow2(-net.k);
    std::vector<bool> in(space.size(), false);
    for (PointIndex p : net.points) in[p] = true;
    for (std::size_t a = 0; a < net.points.size(); ++a) {
      for (std::size_t b = a + 1; b < net.points.size(); ++b) {
        if (space.distance(net.points[a], net.points[b]) < r) return false;
      }
    }
    for (PointIndex p = 0; p < space.size(); ++p) {
      if (in[p]) continue;
      const bool near = std::any_of(net.points.begin(), net.points.end(),
                                    [&](PointIndex q) { return space.distance(p, q) < r; });
      if (!near) return false;
    }
  }
  return true;
}

std::optional<PointPair> separation_contract_failure(const FiniteMetricSpace& space, const PetrState& state) {
  for (std::size_t n = 2; n <= state.steps.size(); ++n) {
    const PetrStep& later = state.steps[n - 1];
    for (std::size_t j = 1; j < n; ++j) {
      const PetrStep& earlier = state.steps[j - 1];
      for (PointIndex q : earlier.L) {
        if (std::binary_search(later.N.begin(), later.N.end(), q)) continue;
        for (PointIndex p : later.L) {
          if (space.distance(p, q) < earlier.bound) return PointPair{p, q};
        }
      }
    }
  }
  return std::nullopt;
}

DiscretenessReport discreteness_check(const FiniteMetricSpace& space, std::span<const PointIndex> L,
                                      const PetrState& state) {
  DiscretenessReport report;
  if (state.steps.empty()) throw InputError("discreteness check needs a state produced by petr_extract");
  for (PointIndex x : L) {
    if (x >= space.size()) throw InputError("point index out of range");
    Rational bound = state.steps.back().bound;
    for (const PetrStep& step : state.steps) {
      if (std::binary_search(step.L.begin(), step.L.end(), x)) {
        bound = step.bound;
        break;
      }
    }
    for (PointIndex y : L) {
      if (y != x && space.distance(x, y) < bound) {
        report.ok = false;
        report.violation = PointPair{x, y};
        report.bound = bound;
        return report;
      }
    }
  }
  report.bound = state.separation_floor;
  return report;
}

}  // namespace snac0
