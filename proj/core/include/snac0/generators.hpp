#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snac0/metric_space.hpp"
#include "snac0/rational.hpp"

namespace snac0 {

enum class GeneratorKind {
  ud_counterexample,
  proper_counterexample,
  harmonic_sequence,
  triple_cluster,
  shrinking_satellites,
  disjoint_sum,
};

const char* generator_kind_name(GeneratorKind kind) noexcept;
/// Accepts the full names and the short forms ud, proper, harmonic, triple,
/// satellites and sum.
GeneratorKind parse_generator_kind(std::string_view name);

/// Parameters for all kinds; each kind reads only its own fields.
struct GeneratorParams {
  // proper_counterexample: eps_k = eps_limit - eps_scale/(k+1), unless an
  // explicit finite list eps_1, eps_2, ... is given.
  Rational eps_limit{1, 2};
  Rational eps_scale{1, 2};
  std::vector<Rational> epsilons;

  // shrinking_satellites: centers a_n = ratio^n with radii radius_factor * ratio^n.
  // center_count = 0 leaves the candidate sequence unbounded.
  Rational ratio{1, 2};
  Rational radius_factor{1, 8};
  std::size_t center_count = 0;

  // disjoint_sum: distance between copies of the ud space.
  Rational gap{3};

  friend bool operator==(const GeneratorParams&, const GeneratorParams&) = default;
};

/// Lazy model of one of the countable example spaces.
///
/// Points are addressed by label. The canonical enumeration fixes which
/// points a truncation contains:
///   ud_counterexample     p1, p2, ...              (base p1)
///   proper_counterexample p0, p1, ...              (base p0)
///   harmonic_sequence     p0 = 0, p_n = 1/n        (base p0)
///   triple_cluster        o, a1, b1, e1, a2, ...   (base o)
///   shrinking_satellites  o, a1, s1@r1, a2, ...    (base o)
///   disjoint_sum          m<c>.p<i> by diagonals c + i (base m1.p1)
class SpaceGenerator {
 public:
  explicit SpaceGenerator(GeneratorKind kind, GeneratorParams params = {});

  GeneratorKind kind() const noexcept { return kind_; }
  const GeneratorParams& params() const noexcept { return params_; }

  std::string base_label() const;
  /// Number of points in the canonical enumeration, when finite.
  std::optional<std::size_t> point_count() const;
  std::string label(std::size_t index) const;
  bool contains(std::string_view label) const;
  Rational distance(std::string_view a, std::string_view b) const;

  /// First n points of the canonical enumeration (n counts the base).
  FiniteMetricSpace truncate(std::size_t n) const;
  /// Finite subspace on the given labels; the base is prepended when absent.
  FiniteMetricSpace materialize(std::span<const std::string> labels) const;

  /// Separation radius in the full (untruncated) space.
  SeparationReport separation_radius(std::string_view label) const;
  UniformDiscreteness uniform_discreteness() const;

  /// proper_counterexample: eps_k for k >= 1.
  Rational epsilon(std::size_t k) const;

  // shrinking_satellites queries.
  std::string center(std::size_t n) const;
  std::optional<std::size_t> center_count() const;
  /// Satellites of a_n sit at distance r_n + slack for slack in (0, window).
  Rational satellite_window(std::size_t n) const;
  std::string satellite(std::size_t n, const Rational& slack) const;

 private:
  struct Point {
    std::size_t copy = 0;
    std::size_t index = 0;
    Rational position;
  };

  Point decode(std::string_view label) const;
  Rational point_distance(const Point& a, const Point& b) const;
  Rational center_position(std::size_t n) const;
  Rational center_radius(std::size_t n) const;

  GeneratorKind kind_;
  GeneratorParams params_;
};

}  // namespace snac0
