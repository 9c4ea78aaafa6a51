#include <gtest/gtest.h>

#include <algorithm>

#include "common.hpp"
#include "oracles.hpp"
#include "snac0/error.hpp"
#include "snac0/fixtures.hpp"
#include "snac0/generators.hpp"
#include "snac0/petr.hpp"

namespace snac0 {
namespace {

TEST(Petr, DirectCaseKeepsFirstNet) {
  const FiniteMetricSpace s = SpaceGenerator(GeneratorKind::ud_counterexample).truncate(6);
  const PetrState st = petr_extract(s, 3);
  ASSERT_EQ(st.steps.size(), 1u);
  EXPECT_EQ(st.steps[0].which, PetrCase::direct);
  EXPECT_EQ(st.L.size(), 6u);
  const DiscretenessReport d = discreteness_check(s, st.L, st);
  EXPECT_TRUE(d.ok);
  EXPECT_EQ(d.bound, Rational(1, 2));
}

TEST(Petr, HierarchicalFixture) {
  const FiniteMetricSpace s = fixtures::hierarchical();
  const PetrState st = petr_extract(s, 2);
  std::vector<std::size_t> sizes;
  for (const SeparatedNet& n : st.nets) sizes.push_back(n.points.size());
  EXPECT_EQ(sizes.back(), 512u);
  EXPECT_TRUE(std::find(sizes.begin(), sizes.end(), 8u) != sizes.end());
  EXPECT_TRUE(std::find(sizes.begin(), sizes.end(), 64u) != sizes.end());
  EXPECT_EQ(st.L.size(), 512u);
  EXPECT_TRUE(oracle::nets_maximal(s, st));
  EXPECT_TRUE(nets_are_maximal(s, st));
  EXPECT_TRUE(oracle::petr_contract_failures(s, st).empty());
  EXPECT_FALSE(separation_contract_failure(s, st).has_value());
  EXPECT_TRUE(discreteness_check(s, st.L, st).ok);
}

TEST(Petr, ConcentrationFiresCaseB) {
  const FiniteMetricSpace s = fixtures::concentration();
  const PetrState st = petr_extract(s, 2);
  const auto b = std::find_if(st.steps.begin(), st.steps.end(),
                              [](const PetrStep& step) { return step.which == PetrCase::b; });
  ASSERT_NE(b, st.steps.end());
  EXPECT_EQ(b->N, (std::vector<PointIndex>{s.index_of("c0")}));
  ASSERT_TRUE(b->j0.has_value());
  for (std::size_t count : oracle::petr_close_counts(s, st, b->n)) EXPECT_LE(count, 1u);
  EXPECT_TRUE(oracle::petr_contract_failures(s, st).empty());
  EXPECT_TRUE(discreteness_check(s, st.L, st).ok);
  EXPECT_FALSE(std::binary_search(st.L.begin(), st.L.end(), s.index_of("c0")));
}

TEST(Petr, InjectedPointBreaksDiscreteness) {
  const FiniteMetricSpace base = fixtures::concentration();
  const PetrState st = petr_extract(base, 2);
  // Same space plus z at 1/128 from t1, appended so existing indices stay valid.
  std::vector<std::string> labels = base.points();
  labels.push_back("z");
  const PointIndex t1 = base.index_of("t1");
  const PointIndex z = base.size();
  const FiniteMetricSpace s = FiniteMetricSpace::from_symmetric(labels, base.base(), [&](std::size_t i, std::size_t j) {
    if (j != z) return base.distance(i, j);
    return i == t1 ? Rational(1, 128) : base.distance(i, t1) + Rational(1, 128);
  });
  ASSERT_TRUE(validate_metric(s).ok());
  EXPECT_TRUE(discreteness_check(s, st.L, st).ok);
  std::vector<PointIndex> corrupted = st.L;
  corrupted.push_back(z);
  const DiscretenessReport d = discreteness_check(s, corrupted, st);
  EXPECT_FALSE(d.ok);
  ASSERT_TRUE(d.violation.has_value());
  EXPECT_LT(s.distance(d.violation->p, d.violation->q), d.bound);
}

TEST(Petr, RejectsBadArguments) {
  const FiniteMetricSpace s = fixtures::hierarchical();
  EXPECT_THROW(petr_extract(s, 0), InputError);
  EXPECT_THROW(petr_extract(s, 2, Rational(0)), InputError);
  EXPECT_THROW(petr_extract(s, 2, Rational(3, 2)), InputError);
  EXPECT_THROW(petr_extract(s, 5), PreconditionError);
}

TEST(Petr, UltrametricVariantHonoursContract) {
  const FiniteMetricSpace s = fixtures::ultrametric_hierarchy();
  const PetrState st = petr_extract(s, 2);
  EXPECT_TRUE(oracle::petr_contract_failures(s, st).empty());
  EXPECT_TRUE(discreteness_check(s, st.L, st).ok);
}

}  // namespace
}  // namespace snac0
