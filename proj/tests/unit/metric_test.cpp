#include <gtest/gtest.h>

#include "common.hpp"
#include "oracles.hpp"
#include "random_data.hpp"
#include "snac0/error.hpp"
#include "snac0/generators.hpp"

namespace snac0 {
namespace {

using unit::q;

TEST(Metric, OnePointSpaceIsValid) {
  const FiniteMetricSpace one({"o"}, "o", {{Rational()}});
  EXPECT_TRUE(validate_metric(one).ok());
}

TEST(Metric, ReportsBrokenTriangleWithTriple) {
  const FiniteMetricSpace s = unit::triangle("5", "1", "1");
  const MetricValidation v = validate_metric(s);
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].axiom, Axiom::triangle);
  // d(a,b) > d(a,c) + d(c,b)
  EXPECT_EQ(v.violations[0].points, (std::vector<PointIndex>{0, 2, 1}));
  EXPECT_THROW(require_valid_metric(s), PreconditionError);
}

TEST(Metric, RejectsMalformedMatrices) {
  EXPECT_THROW(FiniteMetricSpace({"a", "b"}, "a", {{q("0"), q("1")}}), InputError);
  EXPECT_THROW(FiniteMetricSpace({"a", "b"}, "a", {{q("0"), q("-1")}, {q("-1"), q("0")}}), InputError);
  EXPECT_THROW(FiniteMetricSpace({"a", "a"}, "a", {{q("0"), q("1")}, {q("1"), q("0")}}), InputError);
  EXPECT_THROW(FiniteMetricSpace({"a", "b"}, "z", {{q("0"), q("1")}, {q("1"), q("0")}}), InputError);
}

TEST(Metric, ValidationAgreesWithOracle) {
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const FiniteMetricSpace s = testing::random_matrix(rng, 2 + i % 9);
    EXPECT_EQ(validate_metric(s).violations, oracle::metric_violations(s)) << "matrix " << i;
  }
}

TEST(Metric, SeparationRadiusOnTruncations) {
  const SpaceGenerator ud(GeneratorKind::ud_counterexample);
  const FiniteMetricSpace s = ud.truncate(5);
  const SeparationReport r = separation_radius(s, "p2");
  EXPECT_EQ(r.radius, Rational(6, 5));
  EXPECT_TRUE(r.attained);
  EXPECT_EQ(r.witnesses, (std::vector<std::string>{"p5"}));
  EXPECT_THROW(separation_radius(s, "p9"), InputError);
}

TEST(Metric, MaximalSeparatedSubset) {
  const FiniteMetricSpace s = SpaceGenerator(GeneratorKind::ud_counterexample).truncate(6);
  EXPECT_EQ(maximal_separated_subset(s, Rational(2)), (std::vector<PointIndex>{0}));
  EXPECT_EQ(maximal_separated_subset(s, Rational(1)).size(), 6u);
}

TEST(Metric, DisjointSumKeepsMetric) {
  const FiniteMetricSpace part = SpaceGenerator(GeneratorKind::ud_counterexample).truncate(4);
  const std::vector<FiniteMetricSpace> parts(2, part);
  const FiniteMetricSpace sum = disjoint_sum(parts, Rational(3));
  EXPECT_EQ(sum.size(), 8u);
  EXPECT_TRUE(validate_metric(sum).ok());
}

TEST(Metric, UniformDiscretenessOfFiniteSpace) {
  const UniformDiscreteness u = is_uniformly_discrete(unit::triangle("1", "1/3", "1"));
  EXPECT_TRUE(u.uniformly_discrete);
  EXPECT_EQ(u.infimum, Rational(1, 3));
}

}  // namespace
}  // namespace snac0
