#include "snac0/metric_space.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <string>

#include "rational_internal.hpp"
#include "snac0/error.hpp"

namespace snac0 {

namespace {

void check_entries(const std::vector<std::string>& points, std::span<const Rational> dist) {
  const std::size_t n = points.size();
  if (n == 0) throw InputError("metric space needs at least one point");
  if (dist.size() != n * n) throw InputError("distance matrix does not match the number of points");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i * n + j].sign() < 0) {
        throw InputError("negative distance between '" + points[i] + "' and '" + points[j] + "'");
      }
    }
  }
}

std::vector<Rational> flatten(const std::vector<std::vector<Rational>>& rows, std::size_t n) {
  if (rows.size() != n) throw InputError("distance matrix does not match the number of points");
  std::vector<Rational> out;
  out.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError("distance matrix is not square");
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> points, std::string_view base,
                                     const std::vector<std::vector<Rational>>& dist)
    : FiniteMetricSpace(points, [&] {
        auto it = std::find(points.begin(), points.end(), base);
        if (it == points.end()) throw InputError("base point '" + std::string(base) + "' is not a point");
        return static_cast<PointIndex>(it - points.begin());
      }(), flatten(dist, points.size())) {}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> points, PointIndex base,
                                     std::vector<Rational> dist_row_major)
    : points_(std::move(points)), base_(base), dist_(std::move(dist_row_major)) {
  check_entries(points_, dist_);
  if (base_ >= points_.size()) throw InputError("base index out of range");
  index_.reserve(points_.size());
  for (PointIndex i = 0; i < points_.size(); ++i) {
    if (!index_.emplace(points_[i], i).second) throw InputError("duplicate point label '" + points_[i] + "'");
  }
  scaled_ = detail::scale_to_integers(dist_);
}

std::optional<PointIndex> FiniteMetricSpace::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointIndex FiniteMetricSpace::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown point '" + std::string(label) + "'");
}

Rational FiniteMetricSpace::diameter() const {
  const std::size_t n = size();
  if (scaled_) {
    std::int64_t best = 0;
    for (std::int64_t v : scaled_->nums) best = std::max(best, v);
    return Rational(best, scaled_->den);
  }
  Rational best;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(i, j) > best) best = distance(i, j);
    }
  }
  return best;
}

const char* axiom_name(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::zero_self_distance: return "self_distance";
    case Axiom::positivity: return "positivity";
    case Axiom::symmetry: return "symmetry";
    case Axiom::triangle: return "triangle";
  }
  return "unknown";
}

namespace {

void scan_triangles(const std::vector<std::int64_t>& d, std::size_t n, std::vector<AxiomViolation>& out) {
  // Entries are bounded by kScaledLimit, so the sums cannot overflow.
  for (std::size_t p = 0; p < n; ++p) {
    const std::int64_t* row_p = &d[p * n];
    for (std::size_t r = p + 1; r < n; ++r) {
      const std::int64_t dpr = row_p[r];
      for (std::size_t q = 0; q < n; ++q) {
        if (q == p || q == r) continue;
        if (dpr > row_p[q] + d[q * n + r]) out.push_back({Axiom::triangle, {p, q, r}});
      }
    }
  }
}

std::vector<mpz_class> scale_to_mpz(std::span<const Rational> values) {
  mpz_class lcm = 1;
  std::vector<mpq_class> qs;
  qs.reserve(values.size());
  for (const Rational& v : values) {
    qs.push_back(RationalAccess::to_mpq(v));
    const mpz_class& den = qs.back().get_den();
    if (mpz_divisible_p(lcm.get_mpz_t(), den.get_mpz_t())) continue;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> out;
  out.reserve(values.size());
  for (const mpq_class& q : qs) out.push_back(q.get_num() * (lcm / q.get_den()));
  return out;
}

// Large denominators: a double prefilter discards triples whose slack is far
// above rounding error, and the remaining ones are decided on integers over
// the common denominator.
void scan_triangles_big(const FiniteMetricSpace& space, std::vector<AxiomViolation>& out) {
  const std::size_t n = space.size();
  const std::span<const Rational> entries = space.row_major();
  std::vector<double> approx(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) approx[i] = entries[i].to_double();
  const std::vector<mpz_class> d = scale_to_mpz(entries);
  constexpr double kSafety = 1.0 - 1e-12;
  constexpr double kNormalFloor = 1e-280;
  mpz_class sum;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t r = p + 1; r < n; ++r) {
      const double dpr = approx[p * n + r];
      for (std::size_t q = 0; q < n; ++q) {
        if (q == p || q == r) continue;
        const double bound = approx[p * n + q] + approx[q * n + r];
        if (bound > kNormalFloor && dpr < bound * kSafety) continue;
        mpz_add(sum.get_mpz_t(), d[p * n + q].get_mpz_t(), d[q * n + r].get_mpz_t());
        if (mpz_cmp(d[p * n + r].get_mpz_t(), sum.get_mpz_t()) > 0) out.push_back({Axiom::triangle, {p, q, r}});
      }
    }
  }
}

}  // namespace

MetricValidation validate_metric(const FiniteMetricSpace& space) {
  MetricValidation report;
  auto& out = report.violations;
  const std::size_t n = space.size();

  for (std::size_t p = 0; p < n; ++p) {
    if (!space.distance(p, p).is_zero()) out.push_back({Axiom::zero_self_distance, {p}});
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (space.distance(p, q).is_zero() || space.distance(q, p).is_zero()) {
        out.push_back({Axiom::positivity, {p, q}});
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (space.distance(p, q) != space.distance(q, p)) out.push_back({Axiom::symmetry, {p, q}});
    }
  }

  if (const auto* scaled = space.scaled_distances()) {
    scan_triangles(scaled->nums, n, out);
  } else {
    scan_triangles_big(space, out);
  }
  return report;
}

void require_valid_metric(const FiniteMetricSpace& space) {
  const MetricValidation report = validate_metric(space);
  if (report.ok()) return;
  const AxiomViolation& v = report.violations.front();
  std::string where;
  for (PointIndex p : v.points) {
    if (!where.empty()) where += ", ";
    where += space.label(p);
  }
  throw PreconditionError(std::string("space violates the ") + axiom_name(v.axiom) + " axiom at (" + where + ")");
}

SeparationReport separation_radius(const FiniteMetricSpace& space, PointIndex p) {
  const std::size_t n = space.size();
  if (p >= n) throw InputError("point index out of range");
  if (n < 2) throw InputError("separation radius needs at least two points");
  SeparationReport report;
  report.point = space.label(p);
  report.attained = true;
  bool first = true;
  for (PointIndex q = 0; q < n; ++q) {
    if (q == p) continue;
    const Rational& d = space.distance(p, q);
    if (first || d < report.radius) {
      first = false;
      report.radius = d;
      report.witnesses.clear();
    }
    if (d == report.radius) report.witnesses.push_back(space.label(q));
  }
  return report;
}

SeparationReport separation_radius(const FiniteMetricSpace& space, std::string_view label) {
  return separation_radius(space, space.index_of(label));
}

UniformDiscreteness is_uniformly_discrete(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  if (n < 2) throw InputError("uniform discreteness needs at least two points");
  Rational best = space.distance(0, 1);
  if (const auto* scaled = space.scaled_distances()) {
    std::int64_t m = scaled->nums[1];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) m = std::min(m, scaled->nums[i * n + j]);
    }
    best = Rational(m, scaled->den);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (space.distance(i, j) < best) best = space.distance(i, j);
      }
    }
  }
  return {best.sign() > 0, best};
}

std::vector<PointIndex> maximal_separated_subset(const FiniteMetricSpace& space, const Rational& r) {
  if (r.sign() <= 0) throw InputError("separation parameter must be positive");
  std::vector<PointIndex> kept;
  const auto* scaled = space.scaled_distances();
  const std::size_t n = space.size();
  if (scaled) {
    // r * den compared against scaled entries; a threshold above every entry
    // simply keeps the first point only.
    const Rational threshold = r * Rational(scaled->den);
    for (PointIndex p = 0; p < n; ++p) {
      bool ok = true;
      for (PointIndex q : kept) {
        if (Rational(scaled->nums[p * n + q]) < threshold) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back(p);
    }
    return kept;
  }
  for (PointIndex p = 0; p < n; ++p) {
    bool ok = std::all_of(kept.begin(), kept.end(), [&](PointIndex q) { return space.distance(p, q) >= r; });
    if (ok) kept.push_back(p);
  }
  return kept;
}

FiniteMetricSpace disjoint_sum(std::span<const FiniteMetricSpace> parts, const Rational& gap) {
  if (parts.empty()) throw InputError("disjoint sum needs at least one part");
  if (parts.size() == 1) return parts.front();
  if (gap.sign() <= 0) throw PreconditionError("disjoint sum gap must be positive");
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (gap * Rational(2) < parts[k].diameter()) {
      throw PreconditionError("gap " + gap.str() + " is below half the diameter of part " +
                              std::to_string(k + 1));
    }
  }

  std::vector<std::string> labels;
  std::vector<std::size_t> offset;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    offset.push_back(labels.size());
    const std::string prefix = "m" + std::to_string(k + 1) + ".";
    for (const std::string& p : parts[k].points()) labels.push_back(prefix + p);
  }
  const std::size_t n = labels.size();
  std::vector<Rational> dist(n * n, gap);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const std::size_t m = parts[k].size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) dist[(offset[k] + i) * n + offset[k] + j] = parts[k].distance(i, j);
    }
  }
  return FiniteMetricSpace(std::move(labels), parts.front().base(), std::move(dist));
}

}  // namespace snac0
