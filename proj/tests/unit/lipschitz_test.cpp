#include <gtest/gtest.h>

#include "common.hpp"
#include "oracles.hpp"
#include "random_data.hpp"
#include "snac0/error.hpp"
#include "snac0/fixtures.hpp"
#include "snac0/generators.hpp"

namespace snac0 {
namespace {

using unit::share;
using unit::values;

TEST(Lipschitz, NormOnTwoPoints) {
  const SpacePtr ud2 = share(SpaceGenerator(GeneratorKind::ud_counterexample).truncate(2));
  const LipschitzFunction f(ud2, values({"0", "3/2"}));
  EXPECT_EQ(lip_norm(f), Rational(1));
  const std::vector<WitnessPair> w = sna_witnesses(f);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].pair(), (PointPair{0, 1}));
}

TEST(Lipschitz, BaseValueMustBeZero) {
  const SpacePtr s = share(unit::triangle("1", "1", "1"));
  EXPECT_THROW(LipschitzFunction(s, values({"1", "0", "0"})), InputError);
  EXPECT_THROW(LipschitzFunction(s, values({"0", "0"})), InputError);
}

TEST(Lipschitz, NormalizedShiftsBaseToZero) {
  const SpacePtr s = share(unit::triangle("2", "1", "2"));
  const LipschitzFunction f = LipschitzFunction::normalized(s, values({"1", "2", "4"}));
  EXPECT_EQ(f.values(), values({"0", "1", "3"}));
  EXPECT_EQ(lip_norm(f), Rational(3));
}

TEST(Lipschitz, NormMatchesOracle) {
  testing::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const SpacePtr s = share(testing::random_metric(rng, 2 + i % 10));
    std::vector<Rational> v(s->size());
    for (std::size_t p = 1; p < v.size(); ++p) v[p] = testing::grid_value(rng, -3, 3, 7);
    const LipschitzFunction f(s, v);
    EXPECT_EQ(oracle::to_mpq(lip_norm(f)), oracle::lip_norm(f));
  }
}

TEST(Lipschitz, SpikeWitnessesAreSingle) {
  const FunctionFamily spikes = fixtures::violating_spikes();
  for (const LipschitzFunction& f : spikes.members()) {
    EXPECT_EQ(lip_norm(f), Rational(1));
  }
  EXPECT_EQ(sna_witnesses(spikes.member(0)).front().pair(), (PointPair{0, 1}));
}

TEST(Lipschitz, CombineTentsKeepsNorm) {
  const FunctionFamily tents = fixtures::tent_family();
  std::vector<Rational> lambda(tents.size());
  lambda[0] = Rational(1);
  lambda[1] = Rational(-1);
  const LipschitzFunction f = combine(tents, lambda);
  EXPECT_EQ(lip_norm(f), Rational(1));
  const std::vector<WitnessPair> w = sna_witnesses(f);
  bool found = false;
  for (const WitnessPair& p : w) found = found || p.pair() == *tents.witness(0);
  EXPECT_TRUE(found);
  EXPECT_THROW(combine(tents, std::vector<Rational>(tents.size() + 1)), InputError);
}

TEST(Lipschitz, TriangleGapHoldsForAttainingFunctions) {
  testing::Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const SpacePtr s = share(testing::random_metric(rng, 3 + i % 8));
    const LipschitzFunction f = testing::random_unit_function(rng, s);
    const WitnessPair w = sna_witnesses(f).front();
    EXPECT_TRUE(triangle_gap(f, w, testing::grid_value(rng, -5, 5, 13)));
  }
}

TEST(Lipschitz, FamilyChecksSpacesAndNames) {
  const SpacePtr a = share(unit::triangle("1", "1", "1"));
  const SpacePtr b = share(unit::triangle("1", "1", "2"));
  const LipschitzFunction fa(a, values({"0", "1", "0"}));
  const LipschitzFunction fb(b, values({"0", "1", "0"}));
  EXPECT_THROW(FunctionFamily(a, {fa, fb}), InputError);
  const FunctionFamily fam(a, {fa});
  EXPECT_EQ(fam.name(0), "f1");
  EXPECT_FALSE(fam.all_witnesses_declared());
}

}  // namespace
}  // namespace snac0
