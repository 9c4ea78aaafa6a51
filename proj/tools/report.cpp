#include "report.hpp"

namespace snac0::report {

json rational(const Rational& r) { return r.str(); }

json pair(const FiniteMetricSpace& space, PointPair p) { return json::array({space.label(p.p), space.label(p.q)}); }

namespace {

json labels(const FiniteMetricSpace& space, const std::vector<PointIndex>& points) {
  json out = json::array();
  for (PointIndex p : points) out.push_back(space.label(p));
  return out;
}

json constancy_entry(const FunctionFamily& family, const ConstancyEntry& e) {
  json c;
  c["member"] = family.name(e.member);
  c["owner"] = family.name(e.owner);
  c["pair"] = pair(family.space(), e.pair);
  c["value"] = rational(e.value);
  return c;
}

json counterexample(const FunctionFamily& family, const ConstancyCounterexample& cx) {
  json c;
  c["member"] = family.name(cx.member);
  c["owner"] = family.name(cx.owner);
  c["pair"] = pair(family.space(), cx.pair);
  c["values"] = json::array({rational(cx.at_p), rational(cx.at_q)});
  return c;
}

}  // namespace

json validation(const FiniteMetricSpace& space, const MetricValidation& v) {
  json out;
  out["valid"] = v.ok();
  out["points"] = space.size();
  json list = json::array();
  for (const AxiomViolation& a : v.violations) {
    json e;
    e["axiom"] = axiom_name(a.axiom);
    e["points"] = labels(space, a.points);
    list.push_back(std::move(e));
  }
  out["violations"] = std::move(list);
  return out;
}

json norms(const FunctionFamily& family) {
  json list = json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Rational n = lip_norm(family.member(i));
    json e;
    e["name"] = family.name(i);
    e["norm"] = rational(n);
    e["norm_decimal"] = n.to_double();
    list.push_back(std::move(e));
  }
  return json{{"functions", std::move(list)}};
}

json witnesses(const FunctionFamily& family) {
  json list = json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::vector<WitnessPair> w = sna_witnesses(family.member(i));
    json e;
    e["name"] = family.name(i);
    e["norm"] = rational(w.empty() ? Rational() : w.front().ratio);
    json pairs = json::array();
    for (const WitnessPair& p : w) pairs.push_back(pair(family.space(), p.pair()));
    e["pairs"] = std::move(pairs);
    list.push_back(std::move(e));
  }
  return json{{"functions", std::move(list)}};
}

json certify(const FunctionFamily& family, const CertifyResult& result) {
  const FiniteMetricSpace& space = family.space();
  json out;
  if (const auto* v = std::get_if<Violation>(&result)) {
    out["verdict"] = "violated";
    out["pair"] = pair(space, v->pair);
    out["sign_vector"] = v->signs;
    out["excess"] = rational(v->excess);
    out["excess_decimal"] = v->excess.to_double();
    return out;
  }
  const Certificate& c = std::get<Certificate>(result);
  out["verdict"] = "certified";
  out["checked_pairs"] = c.checked_pairs;
  json att = json::array();
  for (std::size_t i = 0; i < c.attainment.size(); ++i) {
    att.push_back(json{{"member", family.name(i)}, {"pair", pair(space, c.attainment[i].pair())}});
  }
  out["attainment"] = std::move(att);
  json table = json::array();
  for (const ConstancyEntry& e : c.constancy) table.push_back(constancy_entry(family, e));
  out["constancy"] = std::move(table);
  return out;
}

json not_normalized(const FunctionFamily& family, std::size_t member) {
  json out;
  out["verdict"] = "not-normalized";
  out["member"] = family.name(member);
  out["norm"] = rational(lip_norm(family.member(member)));
  return out;
}

json attack(const FunctionFamily& family, const AttackResult& result) {
  const FiniteMetricSpace& space = family.space();
  json out;
  if (const auto* inc = std::get_if<Inconclusive>(&result)) {
    out["verdict"] = "inconclusive";
    out["reason"] = inc->reason;
    out["failures"] = inc->failures;
    if (inc->constancy) out["constancy_counterexample"] = counterexample(family, *inc->constancy);
    return out;
  }
  const RefutationTrace& t = std::get<RefutationTrace>(result);
  out["verdict"] = "refuted";
  out["mode"] = trace_mode_name(t.mode);
  out["n0"] = family.name(t.n0);
  out["m0"] = family.name(t.m0);
  out["delta"] = t.delta;
  if (t.constant) out["C_m0"] = rational(*t.constant);
  if (t.margin) out["eps"] = rational(*t.margin);
  json coeffs = json::array();
  for (const Rational& c : t.coefficients) coeffs.push_back(rational(c));
  out["coefficients"] = std::move(coeffs);
  out["pair"] = pair(space, t.pair);
  out["quotient"] = rational(t.quotient);
  out["quotient_decimal"] = t.quotient.to_double();
  json bounds = json::array();
  for (const NamedValue& b : t.bounds) bounds.push_back(json{{"name", b.name}, {"value", rational(b.value)}});
  out["bounds"] = std::move(bounds);
  return out;
}

json petr(const FiniteMetricSpace& space, const PetrState& state) {
  json out;
  out["tau"] = rational(state.tau);
  json nets = json::array();
  for (const SeparatedNet& net : state.nets) nets.push_back(json{{"k", net.k}, {"size", net.points.size()}});
  out["nets"] = std::move(nets);
  out["levels"] = state.k;
  json steps = json::array();
  for (const PetrStep& step : state.steps) {
    json s;
    s["n"] = step.n;
    s["case"] = petr_case_name(step.which);
    s["working_size"] = step.working.size();
    s["quota"] = rational(step.quota);
    if (!step.balls.empty()) {
      std::size_t largest = 0;
      for (const BallCount& b : step.balls) largest = std::max(largest, b.size);
      s["ball_count"] = step.balls.size();
      s["largest_ball"] = largest;
      json heavy = json::array();
      for (const BallCount& b : step.balls) {
        if (b.size > 1) heavy.push_back(json{{"j", b.level}, {"center", space.label(b.center)}, {"size", b.size}});
      }
      s["balls_above_one"] = std::move(heavy);
    }
    if (step.j0) {
      s["j0"] = *step.j0;
      s["alpha0"] = space.label(*step.alpha0);
    }
    s["bound"] = rational(step.bound);
    s["L"] = labels(space, step.L);
    s["N"] = labels(space, step.N);
    steps.push_back(std::move(s));
  }
  out["steps"] = std::move(steps);
  out["L"] = labels(space, state.L);
  out["separation_floor"] = rational(state.separation_floor);
  return out;
}

json case1(const Case1Selection& sel) {
  json out = json::array();
  for (std::size_t i = 0; i < sel.centers.size(); ++i) {
    json e;
    e["a"] = sel.centers[i];
    e["b"] = sel.satellites[i];
    e["d(a,0)"] = rational(sel.base_distances[i]);
    e["R(a)"] = rational(sel.radii[i]);
    e["Delta"] = rational(sel.margins[i]);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace snac0::report
