#include "snac0/generators.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "snac0/error.hpp"

namespace snac0 {

namespace {

constexpr std::size_t kMaxIndex = std::size_t{1} << 40;

// Canonical decimal index: digits only, no leading zeros.
std::optional<std::size_t> parse_index(std::string_view digits) {
  if (digits.empty() || (digits.size() > 1 && digits.front() == '0')) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value > kMaxIndex) return std::nullopt;
  return value;
}

std::optional<std::size_t> parse_prefixed(std::string_view label, char prefix) {
  if (label.empty() || label.front() != prefix) return std::nullopt;
  return parse_index(label.substr(1));
}

Rational ud_distance(std::size_t m, std::size_t n) {
  if (m == n) return Rational();
  return Rational(1) + Rational(1, static_cast<std::int64_t>(std::max(m, n)));
}

[[noreturn]] void unknown_point(std::string_view label, GeneratorKind kind) {
  throw InputError("'" + std::string(label) + "' is not a point of " + generator_kind_name(kind));
}

}  // namespace

const char* generator_kind_name(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::ud_counterexample: return "ud_counterexample";
    case GeneratorKind::proper_counterexample: return "proper_counterexample";
    case GeneratorKind::harmonic_sequence: return "harmonic_sequence";
    case GeneratorKind::triple_cluster: return "triple_cluster";
    case GeneratorKind::shrinking_satellites: return "shrinking_satellites";
    case GeneratorKind::disjoint_sum: return "disjoint_sum";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  struct Alias {
    std::string_view name;
    GeneratorKind kind;
  };
  static constexpr Alias aliases[] = {
      {"ud", GeneratorKind::ud_counterexample},
      {"proper", GeneratorKind::proper_counterexample},
      {"harmonic", GeneratorKind::harmonic_sequence},
      {"triple", GeneratorKind::triple_cluster},
      {"satellites", GeneratorKind::shrinking_satellites},
      {"sum", GeneratorKind::disjoint_sum},
  };
  for (const Alias& a : aliases) {
    if (name == a.name || name == generator_kind_name(a.kind)) return a.kind;
  }
  throw InputError("unknown generator kind '" + std::string(name) + "'");
}

SpaceGenerator::SpaceGenerator(GeneratorKind kind, GeneratorParams params)
    : kind_(kind), params_(std::move(params)) {
  switch (kind_) {
    case GeneratorKind::proper_counterexample:
      if (!params_.epsilons.empty()) {
        Rational prev;
        for (std::size_t k = 0; k < params_.epsilons.size(); ++k) {
          const Rational& e = params_.epsilons[k];
          if (e <= prev) throw InputError("epsilons must be positive and strictly increasing");
          if (e >= Rational(1, 2)) throw InputError("epsilons must stay below 1/2");
          prev = e;
        }
      } else {
        if (params_.eps_limit > Rational(1, 2)) throw InputError("eps_limit must be at most 1/2");
        if (params_.eps_scale.sign() <= 0) throw InputError("eps_scale must be positive");
        if (params_.eps_limit - params_.eps_scale / Rational(2) <= Rational()) {
          throw InputError("eps_1 = eps_limit - eps_scale/2 must be positive");
        }
      }
      break;
    case GeneratorKind::shrinking_satellites: {
      const Rational& rho = params_.ratio;
      const Rational& theta = params_.radius_factor;
      if (rho.sign() <= 0 || rho >= Rational(1)) throw InputError("ratio must lie in (0, 1)");
      if (theta.sign() <= 0) throw InputError("radius_factor must be positive");
      // Keeps the canonical satellite (slack r_n) inside its window.
      if (Rational(2) * theta * rho + theta + rho >= Rational(1)) {
        throw InputError("shrinking_satellites needs 2*radius_factor*ratio + radius_factor + ratio < 1");
      }
      break;
    }
    case GeneratorKind::disjoint_sum:
      if (params_.gap <= Rational(1)) throw InputError("disjoint_sum gap must exceed 1");
      break;
    default:
      break;
  }
}

std::string SpaceGenerator::base_label() const { return label(0); }

std::optional<std::size_t> SpaceGenerator::point_count() const {
  if (kind_ == GeneratorKind::proper_counterexample && !params_.epsilons.empty()) {
    return params_.epsilons.size() + 1;
  }
  if (kind_ == GeneratorKind::shrinking_satellites && params_.center_count > 0) {
    return 2 * params_.center_count + 1;
  }
  return std::nullopt;
}

std::string SpaceGenerator::label(std::size_t index) const {
  if (auto count = point_count(); count && index >= *count) {
    throw InputError(std::string(generator_kind_name(kind_)) + " has only " + std::to_string(*count) + " points");
  }
  switch (kind_) {
    case GeneratorKind::ud_counterexample:
      return "p" + std::to_string(index + 1);
    case GeneratorKind::proper_counterexample:
    case GeneratorKind::harmonic_sequence:
      return "p" + std::to_string(index);
    case GeneratorKind::triple_cluster: {
      if (index == 0) return "o";
      static constexpr char roles[] = {'a', 'b', 'e'};
      return roles[(index - 1) % 3] + std::to_string((index - 1) / 3 + 1);
    }
    case GeneratorKind::shrinking_satellites: {
      if (index == 0) return "o";
      const std::size_t n = (index - 1) / 2 + 1;
      return (index - 1) % 2 == 0 ? center(n) : satellite(n, center_radius(n));
    }
    case GeneratorKind::disjoint_sum: {
      // Diagonal d holds the d points with copy + index = d + 1.
      std::size_t d = 1;
      while (index >= d) {
        index -= d;
        ++d;
      }
      const std::size_t copy = index + 1;
      return "m" + std::to_string(copy) + ".p" + std::to_string(d + 1 - copy);
    }
  }
  throw InternalError("unhandled generator kind");
}

Rational SpaceGenerator::center_position(std::size_t n) const {
  Rational r(1);
  for (std::size_t i = 0; i < n; ++i) r *= params_.ratio;
  return r;
}

Rational SpaceGenerator::center_radius(std::size_t n) const { return params_.radius_factor * center_position(n); }

SpaceGenerator::Point SpaceGenerator::decode(std::string_view label) const {
  switch (kind_) {
    case GeneratorKind::ud_counterexample: {
      auto m = parse_prefixed(label, 'p');
      if (!m || *m == 0) unknown_point(label, kind_);
      return {0, *m, {}};
    }
    case GeneratorKind::proper_counterexample: {
      auto k = parse_prefixed(label, 'p');
      if (!k || (!params_.epsilons.empty() && *k > params_.epsilons.size())) unknown_point(label, kind_);
      return {0, *k, {}};
    }
    case GeneratorKind::harmonic_sequence: {
      auto n = parse_prefixed(label, 'p');
      if (!n) unknown_point(label, kind_);
      return {0, *n, *n == 0 ? Rational() : Rational(1, static_cast<std::int64_t>(*n))};
    }
    case GeneratorKind::triple_cluster: {
      if (label == "o") return {0, 0, {}};
      if (label.empty()) unknown_point(label, kind_);
      const std::string_view roles = "abe";
      const std::size_t role = roles.find(label.front());
      auto n = parse_index(label.substr(1));
      if (role == std::string_view::npos || !n || *n == 0) unknown_point(label, kind_);
      const Rational delta = Rational::pow2(-4 * static_cast<int>(*n));
      Rational pos = Rational::pow2(-static_cast<int>(*n));
      if (role == 1) pos += delta;
      if (role == 2) pos += delta * Rational(5, 4);
      return {role, *n, pos};
    }
    case GeneratorKind::shrinking_satellites: {
      if (label == "o") return {0, 0, {}};
      if (label.empty()) unknown_point(label, kind_);
      const std::size_t at = label.find('@');
      const char head = label.front();
      auto n = parse_index(label.substr(1, at == std::string_view::npos ? std::string_view::npos : at - 1));
      if (!n || *n == 0 || (params_.center_count > 0 && *n > params_.center_count)) unknown_point(label, kind_);
      if (head == 'a' && at == std::string_view::npos) return {0, *n, center_position(*n)};
      if (head != 's' || at == std::string_view::npos) unknown_point(label, kind_);
      const std::string_view slack_text = label.substr(at + 1);
      Rational slack;
      try {
        slack = Rational::parse(slack_text);
      } catch (const InputError&) {
        unknown_point(label, kind_);
      }
      if (slack.str() != slack_text || slack.sign() <= 0 || slack >= satellite_window(*n)) {
        unknown_point(label, kind_);
      }
      return {1, *n, center_position(*n) + center_radius(*n) + slack};
    }
    case GeneratorKind::disjoint_sum: {
      const std::size_t dot = label.find('.');
      if (dot == std::string_view::npos) unknown_point(label, kind_);
      auto c = parse_prefixed(label.substr(0, dot), 'm');
      auto i = parse_prefixed(label.substr(dot + 1), 'p');
      if (!c || !i || *c == 0 || *i == 0) unknown_point(label, kind_);
      return {*c, *i, {}};
    }
  }
  throw InternalError("unhandled generator kind");
}

Rational SpaceGenerator::point_distance(const Point& a, const Point& b) const {
  switch (kind_) {
    case GeneratorKind::ud_counterexample:
      return ud_distance(a.index, b.index);
    case GeneratorKind::proper_counterexample: {
      const std::size_t k = a.index;
      const std::size_t j = b.index;
      if (k == j) return Rational();
      if (j == 0) return Rational(static_cast<std::int64_t>(k));
      if (k == 0) return Rational(static_cast<std::int64_t>(j));
      return Rational(static_cast<std::int64_t>(k + j)) - epsilon(std::max(k, j));
    }
    case GeneratorKind::harmonic_sequence:
    case GeneratorKind::triple_cluster:
    case GeneratorKind::shrinking_satellites:
      return abs(a.position - b.position);
    case GeneratorKind::disjoint_sum:
      if (a.copy != b.copy) return params_.gap;
      return ud_distance(a.index, b.index);
  }
  throw InternalError("unhandled generator kind");
}

bool SpaceGenerator::contains(std::string_view label) const {
  try {
    decode(label);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

Rational SpaceGenerator::distance(std::string_view a, std::string_view b) const {
  return point_distance(decode(a), decode(b));
}

FiniteMetricSpace SpaceGenerator::truncate(std::size_t n) const {
  if (n < 2) throw InputError("truncation needs at least 2 points");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(label(i));
  return materialize(labels);
}

FiniteMetricSpace SpaceGenerator::materialize(std::span<const std::string> labels) const {
  std::vector<std::string> points;
  const std::string base = base_label();
  if (std::find(labels.begin(), labels.end(), base) == labels.end()) points.push_back(base);
  points.insert(points.end(), labels.begin(), labels.end());
  std::vector<Point> decoded;
  decoded.reserve(points.size());
  for (const std::string& p : points) decoded.push_back(decode(p));
  const auto base_at = static_cast<PointIndex>(std::find(points.begin(), points.end(), base) - points.begin());
  return FiniteMetricSpace::from_symmetric(std::move(points), base_at, [&](std::size_t i, std::size_t j) {
    return point_distance(decoded[i], decoded[j]);
  });
}

SeparationReport SpaceGenerator::separation_radius(std::string_view label) const {
  const Point p = decode(label);
  SeparationReport report;
  report.point = std::string(label);
  auto attained_at = [&](Rational radius, std::string witness) {
    report.radius = std::move(radius);
    report.attained = true;
    report.witnesses = {std::move(witness)};
    return report;
  };
  auto not_attained = [&](Rational radius) {
    report.radius = std::move(radius);
    report.attained = false;
    return report;
  };

  switch (kind_) {
    case GeneratorKind::ud_counterexample:
    case GeneratorKind::disjoint_sum:
      return not_attained(Rational(1));
    case GeneratorKind::proper_counterexample:
      // d(p_k, p_j) = k + j - eps > k for j >= 1, so p_0 is the unique nearest point.
      if (p.index == 0) return attained_at(Rational(1), "p1");
      return attained_at(Rational(static_cast<std::int64_t>(p.index)), "p0");
    case GeneratorKind::harmonic_sequence: {
      if (p.index == 0) return not_attained(Rational());
      const auto n = static_cast<std::int64_t>(p.index);
      return attained_at(Rational(1, n) - Rational(1, n + 1), "p" + std::to_string(p.index + 1));
    }
    case GeneratorKind::triple_cluster: {
      if (p.index == 0) return not_attained(Rational());
      const Rational delta = Rational::pow2(-4 * static_cast<int>(p.index));
      const std::string n = std::to_string(p.index);
      if (p.copy == 0) return attained_at(delta, "b" + n);
      if (p.copy == 1) return attained_at(delta / Rational(4), "e" + n);
      return attained_at(delta / Rational(4), "b" + n);
    }
    case GeneratorKind::shrinking_satellites:
      if (p.index == 0 || p.copy == 1) return not_attained(Rational());
      return not_attained(center_radius(p.index));
  }
  throw InternalError("unhandled generator kind");
}

UniformDiscreteness SpaceGenerator::uniform_discreteness() const {
  switch (kind_) {
    case GeneratorKind::ud_counterexample:
    case GeneratorKind::proper_counterexample:
    case GeneratorKind::disjoint_sum:
      return {true, Rational(1)};
    default:
      return {false, Rational()};
  }
}

Rational SpaceGenerator::epsilon(std::size_t k) const {
  if (kind_ != GeneratorKind::proper_counterexample) throw InputError("epsilon profile exists only for proper_counterexample");
  if (k == 0) throw InputError("epsilon index starts at 1");
  if (!params_.epsilons.empty()) {
    if (k > params_.epsilons.size()) throw InputError("epsilon index beyond the explicit profile");
    return params_.epsilons[k - 1];
  }
  return params_.eps_limit - params_.eps_scale / Rational(static_cast<std::int64_t>(k + 1));
}

std::string SpaceGenerator::center(std::size_t n) const {
  if (kind_ != GeneratorKind::shrinking_satellites) throw InputError("centers exist only for shrinking_satellites");
  if (n == 0 || (params_.center_count > 0 && n > params_.center_count)) {
    throw InputError("center index " + std::to_string(n) + " out of range");
  }
  return "a" + std::to_string(n);
}

std::optional<std::size_t> SpaceGenerator::center_count() const {
  if (params_.center_count == 0) return std::nullopt;
  return params_.center_count;
}

Rational SpaceGenerator::satellite_window(std::size_t n) const {
  if (kind_ != GeneratorKind::shrinking_satellites) throw InputError("satellites exist only for shrinking_satellites");
  if (n == 0) throw InputError("center index starts at 1");
  // The previous center's ball edge; a_0 = 1 closes the first window.
  const Rational outer = center_position(n - 1) - center_radius(n - 1);
  return outer - (center_position(n) + center_radius(n));
}

std::string SpaceGenerator::satellite(std::size_t n, const Rational& slack) const {
  center(n);
  if (slack.sign() <= 0 || slack >= satellite_window(n)) {
    throw PreconditionError("satellite slack " + slack.str() + " is outside (0, " + satellite_window(n).str() +
                            ") for center " + std::to_string(n));
  }
  return "s" + std::to_string(n) + "@" + slack.str();
}

}  // namespace snac0
