#include "random_data.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace snac0::testing {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("q" + std::to_string(i));
  return out;
}

}  // namespace

Rational grid_value(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t den) {
  return Rational(std::uniform_int_distribution<std::int64_t>(lo * den, hi * den)(rng), den);
}

FiniteMetricSpace random_metric(Rng& rng, std::size_t n) {
  std::vector<Rational> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = grid_value(rng, 1, 8, 1) / Rational(4);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || i == k || j == k) continue;
        Rational via = d[i * n + k] + d[k * n + j];
        if (via < d[i * n + j]) d[i * n + j] = std::move(via);
      }
    }
  }
  return FiniteMetricSpace(labels(n), 0, std::move(d));
}

FiniteMetricSpace random_matrix(Rng& rng, std::size_t n) {
  const FiniteMetricSpace base = random_metric(rng, n);
  std::vector<Rational> d(base.row_major().begin(), base.row_major().end());
  const std::size_t mode = pick(rng, 10);
  if (n >= 3 && mode == 6) {
    std::size_t p = pick(rng, n), q = pick(rng, n), r = pick(rng, n);
    while (q == p) q = pick(rng, n);
    while (r == p || r == q) r = pick(rng, n);
    d[p * n + r] = d[r * n + p] = d[p * n + q] + d[q * n + r] + Rational(1, 8);
  } else if (n >= 2 && mode == 7) {
    const std::size_t p = pick(rng, n - 1);
    d[p * n + p + 1] += Rational(1, 3);
  } else if (n >= 2 && mode == 8) {
    const std::size_t p = pick(rng, n - 1);
    d[p * n + p + 1] = d[(p + 1) * n + p] = Rational();
  } else if (mode == 9) {
    const std::size_t p = pick(rng, n);
    d[p * n + p] = Rational(1, 5);
  }
  return FiniteMetricSpace(labels(n), 0, std::move(d));
}

LipschitzFunction random_unit_function(Rng& rng, const SpacePtr& space) {
  for (;;) {
    std::vector<Rational> values(space->size());
    for (PointIndex p = 0; p < space->size(); ++p) {
      if (p != space->base()) values[p] = grid_value(rng, -2, 2, 4);
    }
    const Rational norm = lip_norm(LipschitzFunction(space, values));
    if (norm.is_zero()) continue;
    for (Rational& v : values) v /= norm;
    return LipschitzFunction(space, std::move(values));
  }
}

FunctionFamily random_family(Rng& rng, const SpacePtr& space, std::size_t k) {
  std::vector<LipschitzFunction> members;
  std::vector<std::optional<PointPair>> witnesses;
  for (std::size_t i = 0; i < k; ++i) {
    members.push_back(random_unit_function(rng, space));
    witnesses.emplace_back(sna_witnesses(members.back()).front().pair());
  }
  return FunctionFamily(space, std::move(members), {}, std::move(witnesses));
}

FunctionFamily random_tent_family(Rng& rng, std::size_t k, std::size_t part_size) {
  std::vector<FiniteMetricSpace> parts;
  for (std::size_t i = 0; i < k; ++i) parts.push_back(random_metric(rng, part_size));
  auto space = std::make_shared<const FiniteMetricSpace>(disjoint_sum(parts, Rational(4)));
  TentSpec spec;
  for (std::size_t c = 1; c <= k; ++c) {
    const std::string prefix = k == 1 ? "" : "m" + std::to_string(c) + ".";
    const std::size_t x = pick(rng, part_size);
    std::size_t y = pick(rng, part_size);
    while (y == x) y = pick(rng, part_size);
    spec.pairs.push_back({space->index_of(prefix + "q" + std::to_string(x)),
                          space->index_of(prefix + "q" + std::to_string(y))});
  }
  return tent_family(space, spec);
}

FunctionFamily perturb_at_witness(const FunctionFamily& family, std::size_t i, std::size_t j) {
  const SpacePtr& space = family.space_ptr();
  const PointPair w = family.witness(j).value();
  const PointIndex target = w.q == space->base() ? w.p : w.q;
  const PointPair own = family.witness(i).value();
  Rational t(1, 2);
  for (int attempt = 0; attempt < 60; ++attempt, t /= Rational(2)) {
    for (int sign : {1, -1}) {
      std::vector<Rational> values = family.member(i).values();
      values[target] += Rational(sign) * t;
      LipschitzFunction g(space, std::move(values));
      if (lip_norm(g) != Rational(1) || quotient(g, own.p, own.q) != Rational(1)) continue;
      std::vector<LipschitzFunction> members = family.members();
      members[i] = std::move(g);
      return FunctionFamily(space, std::move(members), family.names(), family.witnesses());
    }
  }
  throw std::runtime_error("no norm-preserving perturbation found");
}

}  // namespace snac0::testing
