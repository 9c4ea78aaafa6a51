#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "snac0/rational.hpp"
#include "snac0/scaled.hpp"

namespace snac0 {

using PointIndex = std::size_t;

/// A finite pointed metric space with an exact distance matrix.
///
/// Construction checks only the shape of the matrix and the sign of its
/// entries, so that malformed-but-parseable spaces can still be handed to
/// validate_metric() for a full axiom report.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::vector<std::string> points, std::string_view base,
                    const std::vector<std::vector<Rational>>& dist);
  FiniteMetricSpace(std::vector<std::string> points, PointIndex base, std::vector<Rational> dist_row_major);

  /// Fills a symmetric matrix from distance(i, j), evaluated once for i < j.
  template <class DistanceFn>
  static FiniteMetricSpace from_symmetric(std::vector<std::string> points, PointIndex base,
                                          DistanceFn&& distance) {
    const std::size_t n = points.size();
    std::vector<Rational> dist(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        dist[i * n + j] = distance(i, j);
        dist[j * n + i] = dist[i * n + j];
      }
    }
    return FiniteMetricSpace(std::move(points), base, std::move(dist));
  }

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& label(PointIndex i) const { return points_.at(i); }
  PointIndex base() const noexcept { return base_; }

  std::optional<PointIndex> find(std::string_view label) const;
  /// Throws InputError for unknown labels.
  PointIndex index_of(std::string_view label) const;

  const Rational& distance(PointIndex i, PointIndex j) const { return dist_[i * points_.size() + j]; }
  std::span<const Rational> row_major() const noexcept { return dist_; }

  /// Common-denominator integer view of the matrix, when it fits in 64 bits.
  const detail::ScaledIntegers* scaled_distances() const noexcept {
    return scaled_ ? &*scaled_ : nullptr;
  }

  Rational diameter() const;

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.base_ == b.base_ && a.points_ == b.points_ && a.dist_ == b.dist_;
  }

 private:
  std::vector<std::string> points_;
  PointIndex base_ = 0;
  std::vector<Rational> dist_;
  std::unordered_map<std::string, PointIndex> index_;
  std::optional<detail::ScaledIntegers> scaled_;
};

enum class Axiom {
  zero_self_distance,  // d(p,p) = 0
  positivity,          // d(p,q) > 0 for p != q
  symmetry,            // d(p,q) = d(q,p)
  triangle,            // d(p,r) <= d(p,q) + d(q,r)
};

const char* axiom_name(Axiom axiom) noexcept;

/// For triangle violations `points` is (p, q, r) with q the intermediate point
/// and d(p,r) > d(p,q) + d(q,r).
struct AxiomViolation {
  Axiom axiom;
  std::vector<PointIndex> points;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct MetricValidation {
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive, exact check of all metric axioms. Violations are listed in a
/// fixed order: self distances, positivity and symmetry by pair (p < q), then
/// triangles by (p < r, q).
MetricValidation validate_metric(const FiniteMetricSpace& space);

/// Throws PreconditionError naming the first violated axiom.
void require_valid_metric(const FiniteMetricSpace& space);

struct SeparationReport {
  std::string point;
  Rational radius;
  bool attained = false;
  std::vector<std::string> witnesses;  // empty iff not attained
};

/// Finite separation radius: the minimum distance to another point, with all
/// minimizers in point order.
SeparationReport separation_radius(const FiniteMetricSpace& space, PointIndex p);
SeparationReport separation_radius(const FiniteMetricSpace& space, std::string_view label);

struct UniformDiscreteness {
  bool uniformly_discrete = false;
  Rational infimum;
};

UniformDiscreteness is_uniformly_discrete(const FiniteMetricSpace& space);

/// Greedy sweep in point order: keeps each point at distance >= r from every
/// point kept so far. The result is r-separated and maximal.
std::vector<PointIndex> maximal_separated_subset(const FiniteMetricSpace& space, const Rational& r);

/// Glues spaces with every cross-part distance equal to `gap`. Labels of a
/// multi-part sum are prefixed "m<k>." with k the 1-based part number; the
/// base is the first part's base.
FiniteMetricSpace disjoint_sum(std::span<const FiniteMetricSpace> parts, const Rational& gap);

}  // namespace snac0
