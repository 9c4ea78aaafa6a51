#include "oracles.hpp"

#include <algorithm>

namespace snac0::oracle {

mpq_class to_mpq(const Rational& r) {
  mpq_class q(r.numerator_str() + "/" + r.denominator_str(), 10);
  q.canonicalize();
  return q;
}

namespace {

std::vector<mpq_class> matrix(const FiniteMetricSpace& space) {
  std::vector<mpq_class> out;
  out.reserve(space.size() * space.size());
  for (const Rational& r : space.row_major()) out.push_back(to_mpq(r));
  return out;
}

}  // namespace

std::vector<AxiomViolation> metric_violations(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  const std::vector<mpq_class> d = matrix(space);
  std::vector<AxiomViolation> out;
  for (std::size_t p = 0; p < n; ++p) {
    if (sgn(d[p * n + p]) != 0) out.push_back({Axiom::zero_self_distance, {p}});
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (sgn(d[p * n + q]) == 0 || sgn(d[q * n + p]) == 0) out.push_back({Axiom::positivity, {p, q}});
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (d[p * n + q] != d[q * n + p]) out.push_back({Axiom::symmetry, {p, q}});
    }
  }
  // Integers over one common denominator keep the triple scan cheap.
  mpz_class den = 1;
  for (const mpq_class& v : d) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(d.size());
  for (const mpq_class& v : d) z.push_back(v.get_num() * (den / v.get_den()));
  mpz_class sum;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t r = p + 1; r < n; ++r) {
      for (std::size_t q = 0; q < n; ++q) {
        if (q == p || q == r) continue;
        sum = z[p * n + q] + z[q * n + r];
        if (z[p * n + r] > sum) out.push_back({Axiom::triangle, {p, q, r}});
      }
    }
  }
  return out;
}

std::optional<L1Violation> l1_first_violation(const FunctionFamily& family) {
  const FiniteMetricSpace& space = family.space();
  const std::size_t n = space.size();
  std::vector<std::vector<mpq_class>> values;
  for (const LipschitzFunction& f : family.members()) {
    std::vector<mpq_class> v;
    for (const Rational& r : f.values()) v.push_back(to_mpq(r));
    values.push_back(std::move(v));
  }
  const std::vector<mpq_class> d = matrix(space);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      mpq_class sum = 0;
      for (const auto& v : values) sum += abs(v[p] - v[q]);
      if (sum > d[p * n + q]) return L1Violation{{p, q}, sum - d[p * n + q]};
    }
  }
  return std::nullopt;
}

mpq_class lip_norm(const LipschitzFunction& f) {
  const FiniteMetricSpace& space = f.space();
  const std::size_t n = space.size();
  const std::vector<mpq_class> d = matrix(space);
  std::vector<mpq_class> v;
  for (const Rational& r : f.values()) v.push_back(to_mpq(r));
  mpq_class best = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      mpq_class r = abs(v[p] - v[q]) / d[p * n + q];
      if (r > best) best = r;
    }
  }
  return best;
}

mpq_class combination_quotient(const FunctionFamily& family, std::span<const Rational> coefficients, PointPair pair) {
  mpq_class diff = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const LipschitzFunction& f = family.member(i);
    diff += to_mpq(coefficients[i]) * (to_mpq(f(pair.p)) - to_mpq(f(pair.q)));
  }
  return abs(diff) / to_mpq(family.space().distance(pair.p, pair.q));
}

namespace {

mpq_class level_bound(int k) {
  mpq_class b(1);
  b /= mpq_class(mpz_class(1) << (k + 2));
  return b;
}

}  // namespace

std::vector<PointPair> petr_contract_failures(const FiniteMetricSpace& space, const PetrState& state) {
  const std::size_t size = space.size();
  const std::vector<mpq_class> d = matrix(space);
  std::vector<PointPair> out;
  for (std::size_t n = 2; n <= state.steps.size(); ++n) {
    const PetrStep& later = state.steps[n - 1];
    for (std::size_t j = 1; j < n; ++j) {
      const mpq_class bound = level_bound(state.k.at(j));
      for (PointIndex q : state.steps[j - 1].L) {
        if (std::find(later.N.begin(), later.N.end(), q) != later.N.end()) continue;
        for (PointIndex p : later.L) {
          if (d[p * size + q] < bound) out.push_back({p, q});
        }
      }
    }
  }
  return out;
}

std::vector<std::size_t> petr_close_counts(const FiniteMetricSpace& space, const PetrState& state, std::size_t n) {
  const PetrStep& step = state.steps.at(n - 1);
  const std::size_t size = space.size();
  const std::vector<mpq_class> d = matrix(space);
  std::vector<std::size_t> out;
  if (!step.j0) return out;
  for (std::size_t i = 1; i <= *step.j0; ++i) {
    const mpq_class bound = level_bound(state.k.at(i));
    std::size_t count = 0;
    for (PointIndex x : state.steps[i - 1].L) {
      const bool close = std::any_of(step.L.begin(), step.L.end(),
                                     [&](PointIndex y) { return d[x * size + y] < bound; });
      if (close) ++count;
    }
    out.push_back(count);
  }
  return out;
}

bool nets_maximal(const FiniteMetricSpace& space, const PetrState& state) {
  const std::size_t size = space.size();
  const std::vector<mpq_class> d = matrix(space);
  for (const SeparatedNet& net : state.nets) {
    mpq_class r(1);
    r /= mpq_class(mpz_class(1) << net.k);
    for (std::size_t a = 0; a < net.points.size(); ++a) {
      for (std::size_t b = a + 1; b < net.points.size(); ++b) {
        if (d[net.points[a] * size + net.points[b]] < r) return false;
      }
    }
    for (PointIndex p = 0; p < space.size(); ++p) {
      const bool covered = std::any_of(net.points.begin(), net.points.end(), [&](PointIndex q) {
        return q == p || d[p * size + q] < r;
      });
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace snac0::oracle
