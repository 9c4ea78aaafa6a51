#include "snac0/certify.hpp"

#include <optional>
#include <string>

#include "joint_scale.hpp"
#include "rational_internal.hpp"
#include "snac0/error.hpp"

namespace snac0 {

namespace {

std::optional<PointPair> first_violation_scaled(const FunctionFamily& family, const detail::JointScale& scale) {
  const std::size_t n = family.space().size();
  const std::size_t k = family.size();
  // Point-major copy so that one pair touches two contiguous rows.
  std::vector<std::int64_t> rows(n * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t p = 0; p < n; ++p) rows[p * k + i] = scale.values[i * n + p];
  }
  for (std::size_t p = 0; p < n; ++p) {
    const std::int64_t* rp = &rows[p * k];
    for (std::size_t q = p + 1; q < n; ++q) {
      const std::int64_t* rq = &rows[q * k];
      const i128 d = scale.distance(p * n + q);
      i128 sum = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t diff = rp[i] - rq[i];
        sum += diff < 0 ? -static_cast<i128>(diff) : diff;
      }
      if (sum > d) return PointPair{p, q};
    }
  }
  return std::nullopt;
}

std::optional<PointPair> first_violation_exact(const FunctionFamily& family) {
  const FiniteMetricSpace& space = family.space();
  const std::size_t n = space.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      Rational sum;
      for (const LipschitzFunction& f : family.members()) sum += abs(f(p) - f(q));
      if (sum > space.distance(p, q)) return PointPair{p, q};
    }
  }
  return std::nullopt;
}

}  // namespace

CertifyResult certify_c0(const FunctionFamily& family) {
  const FiniteMetricSpace& space = family.space();
  const std::size_t n = space.size();
  const std::size_t k = family.size();
  if (k == 0) throw InputError("certification needs a nonempty family");
  if (n < 2) throw InputError("certification needs at least two points");

  Certificate cert;
  for (std::size_t i = 0; i < k; ++i) {
    const LipschitzFunction& f = family.member(i);
    if (lip_norm(f) != Rational(1)) {
      throw NotNormalizedError(i, "member '" + family.name(i) + "' has Lipschitz norm " + lip_norm(f).str() +
                                      ", expected 1");
    }
    if (const auto& w = family.witness(i)) {
      cert.attainment.push_back({w->p, w->q, Rational(1)});
    } else {
      cert.attainment.push_back(sna_witnesses(f).front());
    }
  }

  std::vector<Rational> flat;
  flat.reserve(n * k);
  for (const LipschitzFunction& f : family.members()) flat.insert(flat.end(), f.values().begin(), f.values().end());
  const std::optional<detail::JointScale> scale = detail::joint_scale(space, flat);
  const std::optional<PointPair> bad = scale ? first_violation_scaled(family, *scale) : first_violation_exact(family);

  if (bad) {
    Violation v;
    v.pair = *bad;
    Rational sum;
    for (const LipschitzFunction& f : family.members()) {
      const Rational diff = f(bad->p) - f(bad->q);
      v.signs.push_back(diff.sign());
      sum += abs(diff);
    }
    v.excess = sum - space.distance(bad->p, bad->q);
    if (v.excess.sign() <= 0) throw InternalError("violation scan disagrees with exact re-evaluation");
    return v;
  }

  cert.checked_pairs = n * (n - 1) / 2;
  for (std::size_t i = 0; i < k; ++i) {
    const LipschitzFunction& f = family.member(i);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const WitnessPair& w = cert.attainment[j];
      if (f(w.p) != f(w.q)) {
        throw InternalError("certified family is not constant on an attainment pair");
      }
      cert.constancy.push_back({i, j, w.pair(), f(w.p)});
    }
  }
  return cert;
}

GridOracleResult grid_oracle(const FunctionFamily& family, std::span<const CoefficientVector> grid) {
  if (grid.empty()) throw InputError("grid oracle needs a nonempty grid");
  GridOracleResult best;
  bool first = true;
  for (const CoefficientVector& lambda : grid) {
    Rational scale;
    for (const Rational& l : lambda) scale = max(scale, abs(l));
    if (scale.is_zero()) throw InputError("grid oracle: coefficient vectors must be nonzero");
    Rational ratio = lip_norm(combine(family, lambda)) / scale;
    if (first || ratio > best.max_ratio) {
      first = false;
      best.max_ratio = std::move(ratio);
      best.argmax = lambda;
    }
  }
  return best;
}

std::vector<CoefficientVector> sign_grid(std::size_t k, bool with_zero) {
  if (k == 0) throw InputError("sign grid needs k >= 1");
  if (k > 16) throw InputError("sign grid limited to k <= 16");
  const std::vector<int> digits = with_zero ? std::vector<int>{-1, 0, 1} : std::vector<int>{-1, 1};
  std::vector<CoefficientVector> out;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    CoefficientVector v;
    bool nonzero = false;
    for (std::size_t i = 0; i < k; ++i) {
      v.emplace_back(digits[idx[i]]);
      nonzero = nonzero || digits[idx[i]] != 0;
    }
    if (nonzero) out.push_back(std::move(v));
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < digits.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

ConstancyResult constancy_check(const FunctionFamily& family) {
  const std::size_t k = family.size();
  for (std::size_t j = 0; j < k; ++j) {
    if (!family.witness(j)) {
      throw InputError("constancy check needs a declared witness pair for '" + family.name(j) + "'");
    }
  }
  std::vector<ConstancyEntry> table;
  for (std::size_t i = 0; i < k; ++i) {
    const LipschitzFunction& f = family.member(i);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const PointPair w = *family.witness(j);
      if (f(w.p) != f(w.q)) return ConstancyCounterexample{i, j, w, f(w.p), f(w.q)};
      table.push_back({i, j, w, f(w.p)});
    }
  }
  return table;
}

}  // namespace snac0
