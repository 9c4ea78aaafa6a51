#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snac0/metric_space.hpp"
#include "snac0/rational.hpp"

namespace snac0 {

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

/// Exact value vector over a finite pointed space, zero at the base.
class LipschitzFunction {
 public:
  /// Throws InputError when the length is wrong or the base value is nonzero.
  LipschitzFunction(SpacePtr space, std::vector<Rational> values);

  /// Subtracts the base value first (f - f(0)).
  static LipschitzFunction normalized(SpacePtr space, std::vector<Rational> values);
  static LipschitzFunction zero(SpacePtr space);

  const FiniteMetricSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator()(PointIndex p) const { return values_[p]; }
  const Rational& value(std::string_view label) const { return values_[space_->index_of(label)]; }

  friend bool operator==(const LipschitzFunction& a, const LipschitzFunction& b) {
    return a.values_ == b.values_ && (a.space_ == b.space_ || *a.space_ == *b.space_);
  }

 private:
  SpacePtr space_;
  std::vector<Rational> values_;
};

struct PointPair {
  PointIndex p = 0;
  PointIndex q = 0;

  friend bool operator==(const PointPair&, const PointPair&) = default;
  friend auto operator<=>(const PointPair&, const PointPair&) = default;
};

/// A pair with its quotient |f(p) - f(q)| / d(p, q).
struct WitnessPair {
  PointIndex p = 0;
  PointIndex q = 0;
  Rational ratio;

  PointPair pair() const noexcept { return {p, q}; }
  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

/// |f(p) - f(q)| / d(p, q) for p != q.
Rational quotient(const LipschitzFunction& f, PointIndex p, PointIndex q);

/// Maximum quotient over unordered pairs. Throws InputError on a one-point space.
Rational lip_norm(const LipschitzFunction& f);

/// Every pair (p < q) whose quotient equals the norm, in row-major order.
std::vector<WitnessPair> sna_witnesses(const LipschitzFunction& f);

using CoefficientVector = std::vector<Rational>;

class FunctionFamily {
 public:
  /// Names default to f1, f2, ...; a declared witness must be an attainment
  /// pair of its member (InputError otherwise).
  FunctionFamily(SpacePtr space, std::vector<LipschitzFunction> members, std::vector<std::string> names = {},
                 std::vector<std::optional<PointPair>> witnesses = {});

  const FiniteMetricSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  std::size_t size() const noexcept { return members_.size(); }
  const LipschitzFunction& member(std::size_t i) const { return members_.at(i); }
  const std::vector<LipschitzFunction>& members() const noexcept { return members_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::optional<PointPair>& witness(std::size_t i) const { return witnesses_.at(i); }
  const std::vector<std::optional<PointPair>>& witnesses() const noexcept { return witnesses_; }
  bool all_witnesses_declared() const noexcept;

  friend bool operator==(const FunctionFamily& a, const FunctionFamily& b) {
    return a.members_ == b.members_ && a.names_ == b.names_ && a.witnesses_ == b.witnesses_;
  }

 private:
  SpacePtr space_;
  std::vector<LipschitzFunction> members_;
  std::vector<std::string> names_;
  std::vector<std::optional<PointPair>> witnesses_;
};

/// Pointwise sum of lambda[i] * f_i. Throws InputError on a length mismatch.
LipschitzFunction combine(const FunctionFamily& family, std::span<const Rational> lambda);

/// Checks |f(x) - C| + |f(y) - C| >= d(x, y) for an attainment pair (x, y) of
/// a norm-one function. Throws ContractError when the pair does not attain or
/// the norm is not 1.
bool triangle_gap(const LipschitzFunction& f, const WitnessPair& pair, const Rational& c);

}  // namespace snac0
