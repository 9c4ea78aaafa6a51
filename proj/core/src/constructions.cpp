#include "snac0/constructions.hpp"

#include <algorithm>
#include <set>

#include "snac0/error.hpp"

namespace snac0 {

namespace {

std::string pair_list(const FiniteMetricSpace& space, std::span<const std::pair<std::size_t, std::size_t>> failures,
                      const TentSpec& spec) {
  constexpr std::size_t shown = 8;
  std::string out;
  for (std::size_t i = 0; i < std::min(shown, failures.size()); ++i) {
    const auto [a, b] = failures[i];
    if (!out.empty()) out += ", ";
    out += "(" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ") at centers " +
           space.label(spec.pairs[a].p) + ", " + space.label(spec.pairs[b].p);
  }
  if (failures.size() > shown) out += " and " + std::to_string(failures.size() - shown) + " more";
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> tent_hypothesis_failures(const FiniteMetricSpace& space,
                                                                          const TentSpec& spec) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& pairs = spec.pairs;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    const Rational& ra = space.distance(pairs[a].p, pairs[a].q);
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      if (space.distance(pairs[a].p, pairs[b].p) < ra + space.distance(pairs[b].p, pairs[b].q)) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

FunctionFamily tent_family(SpacePtr space, const TentSpec& spec) {
  if (!space) throw InputError("tent family needs a space");
  const std::size_t n = space->size();
  if (spec.pairs.empty()) throw InputError("tent family needs at least one pair");
  std::set<PointIndex> centers;
  for (std::size_t g = 0; g < spec.pairs.size(); ++g) {
    const PointPair& pr = spec.pairs[g];
    if (pr.p >= n || pr.q >= n) throw InputError("tent pair " + std::to_string(g + 1) + " is out of range");
    if (pr.p == pr.q) {
      throw PreconditionError("tent pair " + std::to_string(g + 1) + " is degenerate (x = y = " + space->label(pr.p) + ")");
    }
    if (!centers.insert(pr.p).second) {
      throw PreconditionError("tent center " + space->label(pr.p) + " is used twice");
    }
  }
  const auto failures = tent_hypothesis_failures(*space, spec);
  if (!failures.empty()) {
    throw PreconditionError("tent hypothesis d(x_a, x_b) >= d(x_a, y_a) + d(x_b, y_b) fails for " +
                            pair_list(*space, failures, spec));
  }

  std::vector<LipschitzFunction> members;
  std::vector<std::optional<PointPair>> witnesses;
  for (const PointPair& pr : spec.pairs) {
    const Rational& r = space->distance(pr.p, pr.q);
    std::vector<Rational> values(n);
    for (PointIndex x = 0; x < n; ++x) {
      const Rational& d = space->distance(x, pr.p);
      if (d < r) values[x] = r - d;
    }
    members.push_back(LipschitzFunction::normalized(space, std::move(values)));
    witnesses.emplace_back(pr);
  }
  return FunctionFamily(space, std::move(members), {}, std::move(witnesses));
}

FunctionFamily nearest_neighbor_tents(SpacePtr space, std::span<const PointIndex> centers) {
  if (!space) throw InputError("tent family needs a space");
  TentSpec spec;
  for (PointIndex x : centers) {
    const SeparationReport r = separation_radius(*space, x);
    spec.pairs.push_back({x, space->index_of(r.witnesses.front())});
  }
  return tent_family(std::move(space), spec);
}

std::vector<SpikeData> spike_data(const FiniteMetricSpace& space, const SpikeSpec& spec) {
  const std::size_t k = spec.pairs.size();
  if (k == 0) throw InputError("spike family needs at least one pair");
  if ((!spec.radius_a.empty() && spec.radius_a.size() != k) || (!spec.radius_b.empty() && spec.radius_b.size() != k)) {
    throw InputError("spike radii must be given for every pair or for none");
  }
  std::set<PointIndex> used;
  std::vector<SpikeData> out;
  for (std::size_t i = 0; i < k; ++i) {
    const PointPair& pr = spec.pairs[i];
    const std::string at = "spike " + std::to_string(i + 1);
    if (pr.p >= space.size() || pr.q >= space.size()) throw InputError(at + ": point out of range");
    if (pr.p == pr.q) throw PreconditionError(at + ": a and b coincide");
    if (pr.p == space.base() || pr.q == space.base()) throw PreconditionError(at + ": the base point cannot carry a spike");
    if (!used.insert(pr.p).second || !used.insert(pr.q).second) {
      throw PreconditionError(at + ": point shared with an earlier spike");
    }
    SpikeData d;
    d.radius_a = spec.radius_a.empty() ? separation_radius(space, pr.p).radius : spec.radius_a[i];
    d.radius_b = spec.radius_b.empty() ? separation_radius(space, pr.q).radius : spec.radius_b[i];
    d.epsilon = d.radius_a + d.radius_b - space.distance(pr.p, pr.q);
    if (d.epsilon.sign() <= 0) {
      throw PreconditionError(at + ": eps = R(a) + R(b) - d(a, b) = " + d.epsilon.str() + " is not positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (d.radius_a >= out[j].epsilon / Rational(2)) {
        throw PreconditionError(at + ": condition (i) R(a_" + std::to_string(i + 1) + ") < eps_" + std::to_string(j + 1) +
                                "/2 fails");
      }
    }
    if (d.radius_b >= d.radius_a / Rational(2)) {
      throw PreconditionError(at + ": condition (ii) R(b) < R(a)/2 fails");
    }
    out.push_back(std::move(d));
  }
  return out;
}

FunctionFamily spike_family(SpacePtr space, const SpikeSpec& spec) {
  if (!space) throw InputError("spike family needs a space");
  const std::vector<SpikeData> data = spike_data(*space, spec);
  std::vector<LipschitzFunction> members;
  std::vector<std::optional<PointPair>> witnesses;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Rational half_eps = data[i].epsilon / Rational(2);
    std::vector<Rational> values(space->size());
    values[spec.pairs[i].p] = data[i].radius_a - half_eps;
    values[spec.pairs[i].q] = half_eps - data[i].radius_b;
    members.emplace_back(space, std::move(values));
    witnesses.emplace_back(spec.pairs[i]);
  }
  return FunctionFamily(space, std::move(members), {}, std::move(witnesses));
}

Case1Result case1_select(const SpaceGenerator& gen, std::size_t count, std::size_t max_candidates) {
  if (gen.kind() != GeneratorKind::shrinking_satellites) {
    throw InputError("case1 selection needs a shrinking_satellites generator");
  }
  if (count == 0) throw InputError("case1 selection needs count >= 1");
  const std::string base = gen.base_label();
  std::size_t limit = max_candidates;
  if (auto cc = gen.center_count()) limit = std::min(limit, *cc);

  Case1Selection sel;
  std::vector<std::size_t> picked;
  for (std::size_t n = 1; n <= limit && sel.centers.size() < count; ++n) {
    sel.scanned = n;
    const std::string a = gen.center(n);
    const Rational d0 = gen.distance(a, base);
    const SeparationReport r = gen.separation_radius(a);
    if (r.attained) throw PreconditionError("candidate " + a + " attains its separation radius");
    const bool fits = std::all_of(sel.margins.begin(), sel.margins.end(), [&](const Rational& m) { return d0 <= m; });
    if (!fits) continue;
    Rational margin = (d0 - r.radius) / Rational(4);
    sel.satellites.push_back(gen.satellite(n, margin));
    sel.centers.push_back(a);
    sel.base_distances.push_back(d0);
    sel.radii.push_back(r.radius);
    sel.margins.push_back(std::move(margin));
    picked.push_back(n);
  }
  if (sel.centers.size() < count) {
    throw InsufficientSequenceError(sel.centers.size(), "candidate sequence exhausted after " +
                                                            std::to_string(sel.scanned) + " candidates with " +
                                                            std::to_string(sel.centers.size()) + " of " +
                                                            std::to_string(count) + " picks");
  }
  if (std::string failure = verify_case1_chain(gen, sel); !failure.empty()) {
    throw InternalError("case1 selection: " + failure);
  }

  std::vector<std::string> labels{base};
  std::set<std::string> seen{base};
  auto add = [&](const std::string& label) {
    if (seen.insert(label).second) labels.push_back(label);
  };
  std::size_t next_pick = 0;
  for (std::size_t n = 1; n <= sel.scanned; ++n) {
    add(gen.center(n));
    add(gen.label(2 * n));
    if (next_pick < picked.size() && picked[next_pick] == n) add(sel.satellites[next_pick++]);
  }
  auto space = std::make_shared<const FiniteMetricSpace>(gen.materialize(labels));
  TentSpec spec;
  for (std::size_t k = 0; k < sel.centers.size(); ++k) {
    spec.pairs.push_back({space->index_of(sel.centers[k]), space->index_of(sel.satellites[k])});
  }
  FunctionFamily family = tent_family(space, spec);
  return {std::move(sel), std::move(space), std::move(family)};
}

std::string verify_case1_chain(const SpaceGenerator& gen, const Case1Selection& sel) {
  const std::size_t k = sel.centers.size();
  std::vector<Rational> pair_dist;
  for (std::size_t i = 0; i < k; ++i) {
    pair_dist.push_back(gen.distance(sel.centers[i], sel.satellites[i]));
    if (pair_dist[i] > sel.radii[i] + sel.margins[i]) {
      return "satellite " + sel.satellites[i] + " is beyond R(a) + Delta";
    }
    if (i > 0 && !(sel.margins[i] < sel.margins[i - 1])) return "Delta is not strictly decreasing at pick " + std::to_string(i + 1);
  }
  for (std::size_t n = 0; n < k; ++n) {
    const Rational middle = sel.radii[n] + Rational(3) * sel.margins[n];
    for (std::size_t m = n + 1; m < k; ++m) {
      const Rational lower = sel.base_distances[n] - sel.base_distances[m];
      const std::string at = " for picks " + std::to_string(n + 1) + " < " + std::to_string(m + 1);
      if (gen.distance(sel.centers[n], sel.centers[m]) < lower) return "d(a_n, a_m) >= d(a_n, 0) - d(a_m, 0) fails" + at;
      if (lower < middle) return "d(a_n, 0) - d(a_m, 0) >= R(a_n) + 3 Delta_n fails" + at;
      if (middle < pair_dist[n] + pair_dist[m]) return "R(a_n) + 3 Delta_n >= d(a_n, b_n) + d(a_m, b_m) fails" + at;
    }
  }
  return {};
}

FunctionFamily gamma_compose(SpacePtr space, std::span<const PointIndex> marks, const Rational& closeness) {
  if (!space) throw InputError("gamma composition needs a space");
  if (marks.empty()) throw InputError("gamma composition needs at least one mark");
  if (closeness.sign() <= 0) throw InputError("closeness must be positive");
  TentSpec spec;
  for (PointIndex x : marks) {
    if (x >= space->size()) throw InputError("mark out of range");
    std::optional<PointIndex> best;
    for (PointIndex y = 0; y < space->size(); ++y) {
      if (y == x || space->distance(x, y) > closeness) continue;
      if (!best || space->distance(x, y) > space->distance(x, *best)) best = y;
    }
    if (!best) {
      throw PreconditionError("mark " + space->label(x) + " has no other point within closeness " + closeness.str());
    }
    spec.pairs.push_back({x, *best});
  }
  return tent_family(std::move(space), spec);
}

}  // namespace snac0
