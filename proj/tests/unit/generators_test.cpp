#include <gtest/gtest.h>

#include "snac0/error.hpp"
#include "snac0/generators.hpp"

namespace snac0 {
namespace {

TEST(Generators, UdDistances) {
  const SpaceGenerator ud(GeneratorKind::ud_counterexample);
  EXPECT_EQ(ud.truncate(2).distance(0, 1), Rational(3, 2));
  EXPECT_EQ(ud.distance("p3", "p7"), Rational(8, 7));
  EXPECT_EQ(ud.base_label(), "p1");
  for (std::size_t n : {2u, 5u, 40u}) {
    const FiniteMetricSpace s = ud.truncate(n);
    EXPECT_TRUE(validate_metric(s).ok());
    EXPECT_EQ(s.diameter(), Rational(3, 2));
    EXPECT_EQ(separation_radius(s, 0).radius, Rational(1) + Rational(1, static_cast<std::int64_t>(n)));
  }
}

TEST(Generators, UdRadiusIsNeverAttained) {
  const SpaceGenerator ud(GeneratorKind::ud_counterexample);
  const SeparationReport r = ud.separation_radius("p4");
  EXPECT_EQ(r.radius, Rational(1));
  EXPECT_FALSE(r.attained);
  const UniformDiscreteness u = ud.uniform_discreteness();
  EXPECT_TRUE(u.uniformly_discrete);
  EXPECT_EQ(u.infimum, Rational(1));
}

TEST(Generators, ProperDistancesUseEpsilonProfile) {
  const SpaceGenerator proper(GeneratorKind::proper_counterexample);
  EXPECT_EQ(proper.epsilon(2), Rational(1, 3));
  const FiniteMetricSpace s = proper.truncate(3);
  EXPECT_EQ(s.distance(s.index_of("p1"), s.index_of("p2")), Rational(8, 3));
  EXPECT_EQ(s.distance(s.index_of("p0"), s.index_of("p2")), Rational(2));
  const SeparationReport r = proper.separation_radius("p2");
  EXPECT_EQ(r.radius, Rational(2));
  EXPECT_TRUE(r.attained);
  EXPECT_EQ(r.witnesses, (std::vector<std::string>{"p0"}));
  EXPECT_EQ(proper.uniform_discreteness().infimum, Rational(1));
}

TEST(Generators, ProperRejectsBadProfiles) {
  GeneratorParams p;
  p.epsilons = {Rational(1, 4), Rational(1, 5)};
  EXPECT_THROW(SpaceGenerator(GeneratorKind::proper_counterexample, p), InputError);
  p.epsilons = {Rational(1, 4), Rational(1, 2)};
  EXPECT_THROW(SpaceGenerator(GeneratorKind::proper_counterexample, p), InputError);
}

TEST(Generators, TripleClusterIsNotUniformlyDiscrete) {
  const SpaceGenerator triple(GeneratorKind::triple_cluster);
  const UniformDiscreteness u = triple.uniform_discreteness();
  EXPECT_FALSE(u.uniformly_discrete);
  EXPECT_EQ(u.infimum, Rational(0));
  Rational previous(1);
  for (std::size_t n : {4u, 7u, 10u, 13u}) {
    const FiniteMetricSpace s = triple.truncate(n);
    EXPECT_TRUE(validate_metric(s).ok());
    const Rational r = is_uniformly_discrete(s).infimum;
    EXPECT_LT(r, previous);
    previous = r;
  }
}

TEST(Generators, EveryKindTruncatesToAMetric) {
  for (GeneratorKind kind : {GeneratorKind::ud_counterexample, GeneratorKind::proper_counterexample,
                             GeneratorKind::harmonic_sequence, GeneratorKind::triple_cluster,
                             GeneratorKind::shrinking_satellites, GeneratorKind::disjoint_sum}) {
    const SpaceGenerator gen(kind);
    const FiniteMetricSpace s = gen.truncate(12);
    EXPECT_EQ(s.size(), 12u) << generator_kind_name(kind);
    EXPECT_TRUE(validate_metric(s).ok()) << generator_kind_name(kind);
    EXPECT_EQ(s.label(s.base()), gen.base_label());
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        EXPECT_EQ(s.distance(i, j), gen.distance(s.label(i), s.label(j)));
      }
    }
  }
}

TEST(Generators, ParsesShortNames) {
  EXPECT_EQ(parse_generator_kind("ud"), GeneratorKind::ud_counterexample);
  EXPECT_EQ(parse_generator_kind("satellites"), GeneratorKind::shrinking_satellites);
  EXPECT_EQ(parse_generator_kind("disjoint_sum"), GeneratorKind::disjoint_sum);
  EXPECT_THROW(parse_generator_kind("nope"), InputError);
}

TEST(Generators, DisjointSumNeedsGapAboveOne) {
  GeneratorParams p;
  p.gap = Rational(1);
  EXPECT_THROW(SpaceGenerator(GeneratorKind::disjoint_sum, p), InputError);
}

TEST(Generators, UnknownLabels) {
  const SpaceGenerator ud(GeneratorKind::ud_counterexample);
  EXPECT_FALSE(ud.contains("p0"));
  EXPECT_THROW(ud.distance("p0", "p1"), InputError);
}

}  // namespace
}  // namespace snac0
