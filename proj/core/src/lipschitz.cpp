#include "snac0/lipschitz.hpp"

#include <set>

#include "joint_scale.hpp"
#include "rational_internal.hpp"
#include "snac0/error.hpp"

namespace snac0 {

LipschitzFunction::LipschitzFunction(SpacePtr space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw InputError("function needs a space");
  if (values_.size() != space_->size()) throw InputError("value vector does not match the space size");
  if (!values_[space_->base()].is_zero()) {
    throw InputError("function value at the base point '" + space_->label(space_->base()) + "' must be 0");
  }
}

LipschitzFunction LipschitzFunction::normalized(SpacePtr space, std::vector<Rational> values) {
  if (!space) throw InputError("function needs a space");
  if (values.size() != space->size()) throw InputError("value vector does not match the space size");
  const Rational offset = values[space->base()];
  if (!offset.is_zero()) {
    for (Rational& v : values) v -= offset;
  }
  return LipschitzFunction(std::move(space), std::move(values));
}

LipschitzFunction LipschitzFunction::zero(SpacePtr space) {
  if (!space) throw InputError("function needs a space");
  const std::size_t n = space->size();
  return LipschitzFunction(std::move(space), std::vector<Rational>(n));
}

Rational quotient(const LipschitzFunction& f, PointIndex p, PointIndex q) {
  if (p == q) throw InputError("quotient needs two distinct points");
  return abs(f(p) - f(q)) / f.space().distance(p, q);
}

namespace {

struct NormScan {
  // Maximal quotient as an exact fraction num/den over the joint scale, or as
  // a Rational on the slow path.
  i128 num = 0;
  i128 den = 1;
  Rational exact;
  std::optional<detail::JointScale> scale;
};

NormScan scan_norm(const LipschitzFunction& f) {
  const FiniteMetricSpace& space = f.space();
  const std::size_t n = space.size();
  if (n < 2) throw InputError("the Lipschitz norm is undefined on a one-point space");
  NormScan scan;
  scan.scale = detail::joint_scale(space, f.values());
  if (scan.scale) {
    const auto& v = scan.scale->values;
    i128 best_num = 0;
    i128 best_den = 1;
    for (std::size_t p = 0; p < n; ++p) {
      const std::int64_t vp = v[p];
      for (std::size_t q = p + 1; q < n; ++q) {
        const std::int64_t diff = vp - v[q];
        const i128 delta = diff < 0 ? -static_cast<i128>(diff) : diff;
        const i128 d = scan.scale->distance(p * n + q);
        if (delta * best_den > best_num * d) {
          best_num = delta;
          best_den = d;
        }
      }
    }
    scan.num = best_num;
    scan.den = best_den;
    scan.exact = RationalAccess::from_i128(best_num, best_den);
    return scan;
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      Rational r = quotient(f, p, q);
      if (r > scan.exact) scan.exact = std::move(r);
    }
  }
  return scan;
}

}  // namespace

Rational lip_norm(const LipschitzFunction& f) { return scan_norm(f).exact; }

std::vector<WitnessPair> sna_witnesses(const LipschitzFunction& f) {
  const NormScan scan = scan_norm(f);
  const std::size_t n = f.space().size();
  std::vector<WitnessPair> out;
  if (scan.scale) {
    const auto& v = scan.scale->values;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const std::int64_t diff = v[p] - v[q];
        const i128 delta = diff < 0 ? -static_cast<i128>(diff) : diff;
        if (delta * scan.den == scan.num * static_cast<i128>(scan.scale->distance(p * n + q))) {
          out.push_back({p, q, scan.exact});
        }
      }
    }
    return out;
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (quotient(f, p, q) == scan.exact) out.push_back({p, q, scan.exact});
    }
  }
  return out;
}

FunctionFamily::FunctionFamily(SpacePtr space, std::vector<LipschitzFunction> members, std::vector<std::string> names,
                               std::vector<std::optional<PointPair>> witnesses)
    : space_(std::move(space)), members_(std::move(members)), names_(std::move(names)), witnesses_(std::move(witnesses)) {
  if (!space_) throw InputError("family needs a space");
  const std::size_t k = members_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const SpacePtr& other = members_[i].space_ptr();
    if (other != space_ && !(*other == *space_)) {
      throw InputError("member " + std::to_string(i + 1) + " lives on a different space");
    }
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < k; ++i) names_.push_back("f" + std::to_string(i + 1));
  }
  if (names_.size() != k) throw InputError("number of names does not match the number of members");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != k) throw InputError("member names must be unique");
  if (witnesses_.empty()) witnesses_.resize(k);
  if (witnesses_.size() != k) throw InputError("number of witness pairs does not match the number of members");

  for (std::size_t i = 0; i < k; ++i) {
    if (!witnesses_[i]) continue;
    const PointPair w = *witnesses_[i];
    if (w.p >= space_->size() || w.q >= space_->size() || w.p == w.q) {
      throw InputError("declared witness of '" + names_[i] + "' is not a pair of distinct points");
    }
    if (quotient(members_[i], w.p, w.q) != lip_norm(members_[i])) {
      throw InputError("declared witness (" + space_->label(w.p) + ", " + space_->label(w.q) + ") of '" + names_[i] +
                       "' does not attain its norm");
    }
  }
}

bool FunctionFamily::all_witnesses_declared() const noexcept {
  for (const auto& w : witnesses_) {
    if (!w) return false;
  }
  return true;
}

LipschitzFunction combine(const FunctionFamily& family, std::span<const Rational> lambda) {
  if (lambda.size() != family.size()) {
    throw InputError("coefficient vector has length " + std::to_string(lambda.size()) + ", family has " +
                     std::to_string(family.size()) + " members");
  }
  std::vector<Rational> values(family.space().size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].is_zero()) continue;
    const auto& f = family.member(i).values();
    for (std::size_t p = 0; p < values.size(); ++p) {
      if (!f[p].is_zero()) values[p] += lambda[i] * f[p];
    }
  }
  return LipschitzFunction(family.space_ptr(), std::move(values));
}

bool triangle_gap(const LipschitzFunction& f, const WitnessPair& pair, const Rational& c) {
  if (pair.p == pair.q || pair.p >= f.space().size() || pair.q >= f.space().size()) {
    throw ContractError("triangle_gap needs a pair of distinct points");
  }
  if (pair.ratio != quotient(f, pair.p, pair.q)) throw ContractError("triangle_gap: stale witness ratio");
  if (pair.ratio != Rational(1) || lip_norm(f) != Rational(1)) {
    throw ContractError("triangle_gap needs a norm-one function attaining at the pair");
  }
  return abs(f(pair.p) - c) + abs(f(pair.q) - c) >= f.space().distance(pair.p, pair.q);
}

}  // namespace snac0
