#include "snac0/refuter.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <functional>
#include <map>

#include "snac0/error.hpp"

namespace snac0 {

const char* color_name(Color color) noexcept {
  switch (color) {
    case Color::A: return "A";
    case Color::B1: return "B1";
    case Color::B2: return "B2";
    case Color::B3: return "B3";
  }
  return "?";
}

const char* space_kind_name(SpaceKind kind) noexcept {
  switch (kind) {
    case SpaceKind::ud: return "ud";
    case SpaceKind::proper: return "proper";
    case SpaceKind::generic: return "generic";
  }
  return "?";
}

SpaceKind parse_space_kind(std::string_view name) {
  if (name == "ud") return SpaceKind::ud;
  if (name == "proper") return SpaceKind::proper;
  if (name == "generic") return SpaceKind::generic;
  throw InputError("unknown attack mode '" + std::string(name) + "' (expected ud, proper or generic)");
}

const char* trace_mode_name(TraceMode mode) noexcept {
  switch (mode) {
    case TraceMode::case1: return "case1";
    case TraceMode::case2: return "case2";
    case TraceMode::proper_a0b0: return "proper-a0b0";
    case TraceMode::proper_a0b1: return "proper-a0b1";
    case TraceMode::proper_a1b0: return "proper-a1b0";
    case TraceMode::proper_a1b1: return "proper-a1b1";
    case TraceMode::proper_case2: return "proper-case2";
    case TraceMode::generic: return "generic";
  }
  return "?";
}

namespace {

// Index k of a point labeled p<k>.
std::optional<std::size_t> point_number(const std::string& label) {
  if (label.size() < 2 || label.front() != 'p') return std::nullopt;
  if (label.size() > 2 && label[1] == '0') return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), value);
  if (ec != std::errc() || ptr != label.data() + label.size()) return std::nullopt;
  return value;
}

std::vector<std::size_t> require_numbers(const FiniteMetricSpace& space) {
  std::vector<std::size_t> out;
  for (const std::string& label : space.points()) {
    auto k = point_number(label);
    if (!k) throw InputError("this attack needs points labeled p<k>; found '" + label + "'");
    out.push_back(*k);
  }
  return out;
}

void require_witnesses(const FunctionFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family.witness(i)) throw InputError("member '" + family.name(i) + "' has no declared witness pair");
  }
}

void require_unit_norms(const FunctionFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Rational norm = lip_norm(family.member(i));
    if (norm != Rational(1)) {
      throw NotNormalizedError(i, "member '" + family.name(i) + "' has Lipschitz norm " + norm.str() + ", expected 1");
    }
  }
}

Rational evaluate(const FunctionFamily& family, const std::vector<Rational>& coefficients, PointPair pair) {
  Rational diff;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    const LipschitzFunction& f = family.member(i);
    diff += coefficients[i] * (f(pair.p) - f(pair.q));
  }
  return abs(diff) / family.space().distance(pair.p, pair.q);
}

RefutationTrace two_member_trace(const FunctionFamily& family, TraceMode mode, std::size_t n0, std::size_t m0, int cn,
                                 int cm, PointPair pair) {
  RefutationTrace t;
  t.mode = mode;
  t.n0 = n0;
  t.m0 = m0;
  t.delta = cn * cm;
  t.coefficients.assign(family.size(), Rational());
  t.coefficients[n0] = Rational(cn);
  t.coefficients[m0] = Rational(cm);
  t.pair = pair;
  t.quotient = evaluate(family, t.coefficients, pair);
  return t;
}

std::string tag(const FunctionFamily& family, std::size_t n0, std::size_t m0) {
  return "(n0, m0) = (" + family.name(n0) + ", " + family.name(m0) + "): ";
}

std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(const std::vector<std::size_t>& members) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t n0 : members) {
    for (std::size_t m0 : members) {
      if (n0 != m0) out.emplace_back(n0, m0);
    }
  }
  return out;
}

PointPair swapped(PointPair p) { return {p.q, p.p}; }

MonochromaticSubset pick_subset(const RamseyColoring& coloring) {
  return monochromatic_subset(coloring, coloring.size <= 16 ? SubsetMode::exact : SubsetMode::greedy);
}

// Ramsey reduction of B3 to a shared first point: members m with x_m = y_n0
// (kept as is) or with y_m = x_n0 (to be swapped). Returns the chosen set and
// whether it needs swapping.
std::pair<std::vector<std::size_t>, bool> reduce_b3(const std::vector<PointPair>& pairs,
                                                    const std::vector<std::size_t>& subset) {
  const std::size_t n0 = subset.front();
  std::vector<std::size_t> s1;
  std::vector<std::size_t> s2;
  for (std::size_t m : subset) {
    if (m == n0) continue;
    if (pairs[m].p == pairs[n0].q) s1.push_back(m);
    if (pairs[m].q == pairs[n0].p) s2.push_back(m);
  }
  if (s1.size() >= s2.size()) return {s1, false};
  return {s2, true};
}

Inconclusive exhausted(std::string reason, std::vector<std::string> failures) {
  Inconclusive inc;
  inc.reason = std::move(reason);
  inc.failures = std::move(failures);
  return inc;
}

// ---------------------------------------------------------------------------
// ud space: d(p_m, p_n) = 1 + 1/max{m, n}

AttackResult ud_case1(const FunctionFamily& family, const std::vector<std::size_t>& num,
                      const std::vector<PointPair>& pairs, const std::vector<std::size_t>& subset) {
  const FiniteMetricSpace& space = family.space();
  std::vector<std::string> failures;
  for (auto [n0, m0] : ordered_pairs(subset)) {
    const std::string at = tag(family, n0, m0);
    const LipschitzFunction& fn = family.member(n0);
    const LipschitzFunction& fm = family.member(m0);
    PointPair wn = pairs[n0];
    PointPair wm = pairs[m0];
    const auto kn = static_cast<std::int64_t>(std::max(num[wn.p], num[wn.q]));
    const Rational eps(1, 2 * kn);
    const Rational third = eps / Rational(3);

    const Rational cond_i = max(abs(fm(wn.p)), abs(fm(wn.q)));
    if (cond_i > third) {
      failures.push_back(at + "(i) max|f_m0| on the n0 witness is " + cond_i.str() + " > eps/3 = " + third.str());
      continue;
    }
    const Rational cond_ii = max(max(space.distance(wn.p, wm.p), space.distance(wn.p, wm.q)),
                                 max(space.distance(wn.q, wm.p), space.distance(wn.q, wm.q)));
    if (cond_ii > Rational(1) + third) {
      failures.push_back(at + "(ii) cross distance " + cond_ii.str() + " > 1 + eps/3");
      continue;
    }
    if (fn(wm.p) != fn(wm.q)) {
      failures.push_back(at + "constancy: f_n0 is not constant on the witness pair of m0");
      continue;
    }
    const Rational c = fn(wm.p);
    if (abs(fn(wn.p) - c) < abs(fn(wn.q) - c)) wn = swapped(wn);
    if (abs(fm(wm.p)) < abs(fm(wm.q))) wm = swapped(wm);

    // Lower bounds from |f(x) - C| + |f(y) - C| >= d(x, y) = 1 + 2 eps.
    if (!triangle_gap(fn, {wn.p, wn.q, Rational(1)}, c) || !triangle_gap(fm, {wm.p, wm.q, Rational(1)}, Rational())) {
      throw InternalError("triangle gap failed for an attaining norm-one function");
    }
    const auto km = static_cast<std::int64_t>(std::max(num[wm.p], num[wm.q]));
    const Rational eps_m(1, 2 * km);
    const Rational gap_n = abs(fn(wn.p) - c);
    const Rational gap_m = abs(fm(wm.p));
    if (gap_n < Rational(1, 2) + eps || gap_m < Rational(1, 2) + eps_m) {
      failures.push_back(at + "lower bounds 1/2 + eps fail (space is not the ud metric)");
      continue;
    }
    const int delta = fm(wm.p).sign();
    const int cm = fn(wn.p) < c ? delta : -delta;
    RefutationTrace t = two_member_trace(family, TraceMode::case1, n0, m0, 1, cm, {wn.p, wm.p});
    if (t.quotient <= Rational(1)) {
      failures.push_back(at + "combination quotient " + t.quotient.str() + " <= 1");
      continue;
    }
    t.delta = delta;
    t.constant = c;
    t.margin = eps;
    t.bounds = {{"max |f_m0| on (x_n0, y_n0)", cond_i},
                {"max cross distance", cond_ii},
                {"|f_n0(x_n0) - C_m0|", gap_n},
                {"|f_m0(x_m0)|", gap_m}};
    return t;
  }
  return exhausted("no (n0, m0) in the A-subset meets the Case 1 conditions", std::move(failures));
}

AttackResult ud_case2(const FunctionFamily& family, std::vector<PointPair> pairs, const std::vector<std::size_t>& set) {
  std::vector<std::string> failures;
  const Rational tenth(1, 10);
  for (auto [n0, m0] : ordered_pairs(set)) {
    const std::string at = tag(family, n0, m0);
    const LipschitzFunction& fn = family.member(n0);
    const LipschitzFunction& fm = family.member(m0);
    const PointIndex x = pairs[n0].p;
    const PointIndex yn = pairs[n0].q;
    const PointIndex ym = pairs[m0].q;
    if (abs(fn(x)) > tenth || abs(fm(x)) > tenth) {
      failures.push_back(at + "shared-point bound |f(x)| <= 1/10 fails at the shared point");
      continue;
    }
    if (abs(fn(yn)) < Rational(9, 10) || abs(fm(ym)) < Rational(9, 10)) {
      failures.push_back(at + "far-point bound |f(y)| >= 9/10 fails (space is not the ud metric)");
      continue;
    }
    if (fm(yn) != fm(x) || fn(ym) != fn(x)) {
      failures.push_back(at + "constancy: a member is not constant on the other's witness pair");
      continue;
    }
    const int sn = fn(yn).sign();
    const int sm = fm(ym).sign();
    RefutationTrace t = two_member_trace(family, TraceMode::case2, n0, m0, sn, -sm, {yn, ym});
    if (t.quotient <= Rational(1)) {
      failures.push_back(at + "combination quotient " + t.quotient.str() + " <= 1");
      continue;
    }
    t.bounds = {{"|f_n0(x)|", abs(fn(x))}, {"|f_m0(x)|", abs(fm(x))}, {"|f_n0(y_n0)|", abs(fn(yn))},
                {"|f_m0(y_m0)|", abs(fm(ym))}};
    return t;
  }
  return exhausted("no (n0, m0) in the B-subset meets the Case 2 conditions", std::move(failures));
}

AttackResult ud_attack(const FunctionFamily& family) {
  const std::vector<std::size_t> num = require_numbers(family.space());
  require_witnesses(family);
  require_unit_norms(family);
  if (family.size() < 2) return exhausted("the attack needs at least two members", {});
  const RamseyColoring coloring = color_pairs(family, Orientation::declared);
  const MonochromaticSubset subset = pick_subset(coloring);
  if (subset.members.size() < 2) return exhausted("no monochromatic pair of members", {});

  std::vector<PointPair> pairs = coloring.pairs;
  switch (subset.color) {
    case Color::A:
      return ud_case1(family, num, pairs, subset.members);
    case Color::B1:
      return ud_case2(family, pairs, subset.members);
    case Color::B2:
      std::transform(pairs.begin(), pairs.end(), pairs.begin(), swapped);
      return ud_case2(family, pairs, subset.members);
    case Color::B3: {
      auto [set, swap] = reduce_b3(pairs, subset.members);
      if (set.size() < 2) return exhausted("B3 reduction leaves fewer than two members", {});
      if (swap) std::transform(pairs.begin(), pairs.end(), pairs.begin(), swapped);
      return ud_case2(family, pairs, set);
    }
  }
  throw InternalError("unhandled color");
}

// ---------------------------------------------------------------------------
// proper space: d(p_k, p_j) = k + j - eps_max{k,j}, d(p_k, p_0) = k

class EpsilonTable {
 public:
  EpsilonTable(const FiniteMetricSpace& space, const std::vector<std::size_t>& num) : space_(space) {
    for (PointIndex i = 0; i < num.size(); ++i) index_[num[i]] = i;
  }

  // eps_k = k + 1 - d(p_k, p_1) for k >= 2, read off the truncation.
  std::optional<Rational> operator()(std::size_t k) const {
    auto it1 = index_.find(1);
    auto itk = index_.find(k);
    if (k < 2 || it1 == index_.end() || itk == index_.end()) return std::nullopt;
    return Rational(static_cast<std::int64_t>(k + 1)) - space_.distance(itk->second, it1->second);
  }

 private:
  const FiniteMetricSpace& space_;
  std::map<std::size_t, PointIndex> index_;
};

AttackResult proper_case1(const FunctionFamily& family, const std::vector<std::size_t>& num,
                          const std::vector<PointPair>& pairs, const std::vector<std::size_t>& subset) {
  const EpsilonTable eps(family.space(), num);
  std::vector<std::string> failures;
  const Rational half(1, 2);
  for (auto [n0, m0] : ordered_pairs(subset)) {
    const std::string at = tag(family, n0, m0);
    const LipschitzFunction& fn = family.member(n0);
    const LipschitzFunction& fm = family.member(m0);
    const PointPair wn = pairs[n0];
    const PointPair wm = pairs[m0];
    const std::size_t kn = num[wn.p], jn = num[wn.q], km = num[wm.p], jm = num[wm.q];
    if (kn == 0) {
      failures.push_back(at + "k(n0) = 0");
      continue;
    }
    if (km <= jn) {
      failures.push_back(at + "k(m0) <= j(n0)");
      continue;
    }
    const auto e_jn = eps(jn), e_next = eps(jn + 1), e_jm = eps(jm);
    if (!e_jn || !e_next || !e_jm) {
      failures.push_back(at + "eps values needed for delta_j(n0) are outside the truncation");
      continue;
    }
    const Rational d_j = *e_next - *e_jn;
    const Rational bound8 = d_j / Rational(2);
    if (!(abs(fm(wn.p)) < bound8) || !(abs(fm(wn.q)) < bound8)) {
      failures.push_back(at + "|f_m0| < delta_j(n0)/2 fails on the n0 witness");
      continue;
    }
    if (fn(wm.p) != fn(wm.q)) {
      failures.push_back(at + "constancy: f_n0 is not constant on the witness pair of m0");
      continue;
    }
    const Rational c = fn(wm.p);
    const auto K = [](std::size_t v) { return Rational(static_cast<std::int64_t>(v)); };
    const bool a0 = abs(fn(wn.p) - c) >= K(kn) - half * *e_jn;
    const bool a1 = abs(fn(wn.q) - c) >= K(jn) - half * *e_jn;
    const bool b0 = abs(fm(wm.p)) >= K(km) - (half * *e_jn + half * d_j);
    const bool b1 = abs(fm(wm.q)) >= K(jm) - (*e_jm - half * *e_jn - half * d_j);
    if ((!a0 && !a1) || (!b0 && !b1)) {
      failures.push_back(at + "neither (a0) nor (a1) holds, or neither (b0) nor (b1) (space is not the proper metric)");
      continue;
    }
    const PointIndex p = a0 ? wn.p : wn.q;
    const PointIndex q = b0 ? wm.p : wm.q;
    static constexpr TraceMode modes[2][2] = {{TraceMode::proper_a0b0, TraceMode::proper_a0b1},
                                              {TraceMode::proper_a1b0, TraceMode::proper_a1b1}};
    const int sn = (fn(p) - c).sign();
    const int sm = fm(q).sign();
    RefutationTrace t = two_member_trace(family, modes[a0 ? 0 : 1][b0 ? 0 : 1], n0, m0, sn, -sm, {p, q});
    if (t.quotient <= Rational(1)) {
      failures.push_back(at + "combination quotient " + t.quotient.str() + " <= 1");
      continue;
    }
    t.constant = c;
    t.margin = *e_jn;
    t.bounds = {{"delta_j(n0)", d_j}, {"|f_m0(x_n0)|", abs(fm(wn.p))}, {"|f_m0(y_n0)|", abs(fm(wn.q))},
                {a0 ? "|f_n0(x_n0) - C_m0|" : "|f_n0(y_n0) - C_m0|", abs(fn(p) - c)},
                {b0 ? "|f_m0(x_m0)|" : "|f_m0(y_m0)|", abs(fm(q))}};
    return t;
  }
  return exhausted("no (n0, m0) in the A-subset meets the Case 1 conditions", std::move(failures));
}

std::optional<std::string> shared_base_failure(const FunctionFamily& family, std::size_t n0, std::size_t m0,
                                               const std::vector<PointPair>& pairs, PointIndex x) {
  const LipschitzFunction& fn = family.member(n0);
  const LipschitzFunction& fm = family.member(m0);
  if (fn(pairs[m0].q) != fn(x) || fm(pairs[n0].q) != fm(x)) {
    return "constancy: a member is not constant on the other's witness pair";
  }
  return std::nullopt;
}

AttackResult proper_case2(const FunctionFamily& family, const std::vector<std::size_t>& num,
                          const std::vector<PointPair>& pairs, const std::vector<std::size_t>& set) {
  std::vector<std::string> failures;
  const PointIndex x = pairs[set.front()].p;
  const std::size_t k_star = num[x];
  const Rational quarter(1, 4);
  for (auto [n0, m0] : ordered_pairs(set)) {
    const std::string at = tag(family, n0, m0);
    const LipschitzFunction& fn = family.member(n0);
    const LipschitzFunction& fm = family.member(m0);
    const PointIndex yn = pairs[n0].q;
    const PointIndex ym = pairs[m0].q;
    if (k_star != 0) {
      if (!(num[ym] > num[yn])) {
        failures.push_back(at + "j(m0) > j(n0) fails");
        continue;
      }
      if (!(abs(fn(x)) < quarter) || !(abs(fm(x)) < quarter)) {
        failures.push_back(at + "|f(p_k*)| < 1/4 fails");
        continue;
      }
    }
    if (auto why = shared_base_failure(family, n0, m0, pairs, x)) {
      failures.push_back(at + *why);
      continue;
    }
    const int sn = fn(yn).sign();
    const int sm = fm(ym).sign();
    RefutationTrace t = two_member_trace(family, TraceMode::proper_case2, n0, m0, sn, -sm, {yn, ym});
    if (t.quotient <= Rational(1)) {
      failures.push_back(at + "combination quotient " + t.quotient.str() + " <= 1");
      continue;
    }
    t.bounds = {{"k*", Rational(static_cast<std::int64_t>(k_star))},
                {"|f_n0(y_n0)|", abs(fn(yn))},
                {"|f_m0(y_m0)|", abs(fm(ym))}};
    return t;
  }
  return exhausted("no (n0, m0) in the B1-subset meets the Case 2 conditions", std::move(failures));
}

Inconclusive proper_b2(const FunctionFamily& family, const std::vector<std::size_t>& set) {
  Inconclusive inc = exhausted("B2 subset: attaining members sharing y cannot all be constant on each other's pairs, no pattern applies", {});
  std::vector<LipschitzFunction> members;
  std::vector<std::optional<PointPair>> witnesses;
  std::vector<std::string> names;
  for (std::size_t i : set) {
    members.push_back(family.member(i));
    witnesses.push_back(family.witness(i));
    names.push_back(family.name(i));
  }
  const FunctionFamily sub(family.space_ptr(), std::move(members), std::move(names), std::move(witnesses));
  const ConstancyResult check = constancy_check(sub);
  if (const auto* cx = std::get_if<ConstancyCounterexample>(&check)) {
    ConstancyCounterexample mapped = *cx;
    mapped.member = set[cx->member];
    mapped.owner = set[cx->owner];
    inc.constancy = mapped;
  }
  return inc;
}

AttackResult proper_attack(const FunctionFamily& family) {
  const std::vector<std::size_t> num = require_numbers(family.space());
  require_witnesses(family);
  require_unit_norms(family);
  if (family.size() < 2) return exhausted("the attack needs at least two members", {});
  const RamseyColoring coloring = color_pairs(family, Orientation::ascending);
  const MonochromaticSubset subset = pick_subset(coloring);
  if (subset.members.size() < 2) return exhausted("no monochromatic pair of members", {});

  switch (subset.color) {
    case Color::A:
      return proper_case1(family, num, coloring.pairs, subset.members);
    case Color::B1:
      return proper_case2(family, num, coloring.pairs, subset.members);
    case Color::B2:
      return proper_b2(family, subset.members);
    case Color::B3: {
      auto [set, to_b2] = reduce_b3(coloring.pairs, subset.members);
      if (set.size() < 2) return exhausted("B3 reduction leaves fewer than two members", {});
      if (to_b2) return proper_b2(family, set);
      return proper_case2(family, num, coloring.pairs, set);
    }
  }
  throw InternalError("unhandled color");
}

AttackResult generic_attack(const FunctionFamily& family) {
  const CertifyResult verdict = certify_c0(family);
  if (std::holds_alternative<Certificate>(verdict)) {
    return exhausted("certificate holds on this truncation", {});
  }
  const Violation& v = std::get<Violation>(verdict);
  RefutationTrace t;
  t.mode = TraceMode::generic;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < v.signs.size(); ++i) {
    t.coefficients.emplace_back(v.signs[i]);
    if (v.signs[i] != 0) active.push_back(i);
  }
  t.n0 = active.at(0);
  t.m0 = active.size() > 1 ? active[1] : active[0];
  t.delta = v.signs[t.n0] * v.signs[t.m0];
  t.pair = v.pair;
  t.quotient = evaluate(family, t.coefficients, v.pair);
  t.bounds = {{"excess", v.excess}};
  return t;
}

}  // namespace

Color RamseyColoring::color(std::size_t n, std::size_t m) const {
  if (n == m || n >= size || m >= size) throw InputError("color needs two distinct member indices");
  if (n > m) std::swap(n, m);
  // Row-major upper triangle without the diagonal.
  return colors[n * size - n * (n + 1) / 2 + (m - n - 1)];
}

RamseyColoring color_pairs(const FunctionFamily& family, Orientation orientation) {
  require_witnesses(family);
  RamseyColoring out;
  out.size = family.size();
  std::vector<std::size_t> num;
  if (orientation == Orientation::ascending) num = require_numbers(family.space());
  for (std::size_t i = 0; i < family.size(); ++i) {
    PointPair w = *family.witness(i);
    if (orientation == Orientation::ascending && num[w.p] > num[w.q]) w = swapped(w);
    out.pairs.push_back(w);
  }
  for (std::size_t n = 0; n < out.size; ++n) {
    const PointPair a = out.pairs[n];
    for (std::size_t m = n + 1; m < out.size; ++m) {
      const PointPair b = out.pairs[m];
      Color c = Color::A;
      if (a.p == b.p) {
        c = Color::B1;
      } else if (a.q == b.q) {
        c = Color::B2;
      } else if (a.p == b.q || b.p == a.q) {
        c = Color::B3;
      }
      out.colors.push_back(c);
    }
  }
  return out;
}

MonochromaticSubset monochromatic_subset(const RamseyColoring& coloring, SubsetMode mode) {
  const std::size_t k = coloring.size;
  if (k < 2) throw InputError("monochromatic subset needs at least two members");
  if (mode == SubsetMode::exact && k > 16) {
    throw InputError("exact monochromatic search is limited to 16 members; use greedy mode");
  }
  static constexpr Color colors[] = {Color::A, Color::B1, Color::B2, Color::B3};
  MonochromaticSubset best;
  for (Color c : colors) {
    std::vector<std::size_t> found;
    if (mode == SubsetMode::greedy) {
      for (std::size_t i = 0; i < k; ++i) {
        if (std::all_of(found.begin(), found.end(), [&](std::size_t j) { return coloring.color(i, j) == c; })) {
          found.push_back(i);
        }
      }
    } else {
      std::vector<std::uint32_t> adj(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (i != j && coloring.color(i, j) == c) adj[i] |= std::uint32_t{1} << j;
        }
      }
      // Depth-first in ascending index order; only strict improvements are
      // kept, so the first maximum found is the lexicographically smallest.
      std::vector<std::size_t> current;
      std::function<void(std::uint32_t)> search = [&](std::uint32_t candidates) {
        if (current.size() > found.size()) found = current;
        while (candidates != 0) {
          if (current.size() + static_cast<std::size_t>(std::popcount(candidates)) <= found.size()) return;
          const auto i = static_cast<std::size_t>(std::countr_zero(candidates));
          candidates &= candidates - 1;
          current.push_back(i);
          search(candidates & adj[i]);
          current.pop_back();
        }
      };
      search(k == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1);
    }
    if (found.size() > best.members.size()) best = {c, std::move(found)};
  }
  return best;
}

bool verify_trace(const FunctionFamily& family, const RefutationTrace& trace) {
  if (trace.coefficients.size() != family.size()) return false;
  if (trace.pair.p == trace.pair.q || trace.pair.p >= family.space().size() || trace.pair.q >= family.space().size()) {
    return false;
  }
  const Rational q = evaluate(family, trace.coefficients, trace.pair);
  return q == trace.quotient && q > Rational(1);
}

AttackResult attack(const FunctionFamily& family, SpaceKind kind) {
  if (family.size() == 0) throw InputError("attack needs a nonempty family");
  switch (kind) {
    case SpaceKind::ud: return ud_attack(family);
    case SpaceKind::proper: return proper_attack(family);
    case SpaceKind::generic: return generic_attack(family);
  }
  throw InputError("unknown attack mode");
}

AttackResult shared_zero_attack(const FunctionFamily& family) {
  const FiniteMetricSpace& space = family.space();
  const std::vector<std::size_t> num = require_numbers(space);
  require_witnesses(family);
  const PointIndex base = space.base();
  if (num[base] != 0) throw InputError("shared_zero_attack needs the base point p0");
  if (family.size() < 2) throw InputError("shared_zero_attack needs at least two members");
  std::vector<PointPair> pairs;
  for (std::size_t i = 0; i < family.size(); ++i) {
    PointPair w = *family.witness(i);
    if (w.q == base) w = swapped(w);
    if (w.p != base) {
      throw InputError("witness pair of '" + family.name(i) + "' does not contain the base point");
    }
    pairs.push_back(w);
  }
  require_unit_norms(family);

  const std::size_t n0 = 0;
  const std::size_t m0 = 1;
  const LipschitzFunction& fn = family.member(n0);
  const LipschitzFunction& fm = family.member(m0);
  const PointIndex yn = pairs[n0].q;
  const PointIndex ym = pairs[m0].q;
  if (!fn(ym).is_zero()) {
    Inconclusive inc = exhausted("constancy precondition fails: f_n0 does not vanish on the witness of m0", {});
    inc.constancy = ConstancyCounterexample{n0, m0, {base, ym}, fn(base), fn(ym)};
    return inc;
  }
  if (!fm(yn).is_zero()) {
    Inconclusive inc = exhausted("constancy precondition fails: f_m0 does not vanish on the witness of n0", {});
    inc.constancy = ConstancyCounterexample{m0, n0, {base, yn}, fm(base), fm(yn)};
    return inc;
  }
  RefutationTrace t =
      two_member_trace(family, TraceMode::proper_case2, n0, m0, fn(yn).sign(), -fm(ym).sign(), {yn, ym});
  t.bounds = {{"j(n0)", Rational(static_cast<std::int64_t>(num[yn]))},
              {"j(m0)", Rational(static_cast<std::int64_t>(num[ym]))}};
  if (t.quotient <= Rational(1)) throw InternalError("shared-base combination is not above 1");
  return t;
}

}  // namespace snac0
