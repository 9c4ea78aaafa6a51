#include <gtest/gtest.h>

#include <algorithm>

#include "adversarial.hpp"
#include "common.hpp"
#include "oracles.hpp"
#include "random_data.hpp"
#include "snac0/error.hpp"
#include "snac0/fixtures.hpp"
#include "snac0/generators.hpp"
#include "snac0/refuter.hpp"

namespace snac0 {
namespace {

using unit::share;

// f(z) = d(z, x) - d(base, x) attains its norm on every pair through x.
FunctionFamily distance_family(const SpacePtr& s, const std::vector<PointPair>& pairs) {
  std::vector<LipschitzFunction> members;
  std::vector<std::optional<PointPair>> witnesses;
  for (const PointPair& pr : pairs) {
    std::vector<Rational> v(s->size());
    for (std::size_t z = 0; z < s->size(); ++z) v[z] = s->distance(z, pr.p) - s->distance(s->base(), pr.p);
    members.emplace_back(s, std::move(v));
    witnesses.push_back(pr);
  }
  return FunctionFamily(s, std::move(members), {}, std::move(witnesses));
}

SpacePtr ud(std::size_t n) { return share(SpaceGenerator(GeneratorKind::ud_counterexample).truncate(n)); }

TEST(Coloring, BasicColors) {
  const SpacePtr s = ud(5);
  EXPECT_EQ(color_pairs(distance_family(s, {{0, 1}, {2, 3}})).color(0, 1), Color::A);
  EXPECT_EQ(color_pairs(distance_family(s, {{0, 1}, {0, 2}})).color(0, 1), Color::B1);
  EXPECT_EQ(color_pairs(distance_family(s, {{0, 1}, {2, 1}})).color(0, 1), Color::B2);
  EXPECT_EQ(color_pairs(distance_family(s, {{0, 1}, {2, 0}})).color(0, 1), Color::B3);
}

TEST(Coloring, MissingWitnessIsAnInputError) {
  const SpacePtr s = ud(3);
  const FunctionFamily fam(s, {LipschitzFunction(s, {Rational(), Rational(3, 2), Rational(4, 3)})});
  EXPECT_THROW(color_pairs(fam), InputError);
}

RamseyColoring coloring_of(std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>>& b1) {
  RamseyColoring c;
  c.size = k;
  c.colors.assign(k * (k - 1) / 2, Color::A);
  std::size_t at = 0;
  for (std::size_t n = 0; n < k; ++n) {
    for (std::size_t m = n + 1; m < k; ++m, ++at) {
      if (std::find(b1.begin(), b1.end(), std::make_pair(n, m)) != b1.end()) c.colors[at] = Color::B1;
    }
  }
  return c;
}

// Largest monochromatic subset by enumerating every subset.
std::size_t brute_force_maximum(const RamseyColoring& c) {
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << c.size); ++mask) {
    for (Color color : {Color::A, Color::B1, Color::B2, Color::B3}) {
      bool mono = true;
      for (std::size_t n = 0; n < c.size && mono; ++n) {
        for (std::size_t m = n + 1; m < c.size && mono; ++m) {
          if ((mask >> n & 1) && (mask >> m & 1)) mono = c.color(n, m) == color;
        }
      }
      if (mono) best = std::max<std::size_t>(best, __builtin_popcount(mask));
    }
  }
  return best;
}

TEST(Monochromatic, AllAGivesEverything) {
  const RamseyColoring c = coloring_of(5, {});
  const MonochromaticSubset s = monochromatic_subset(c, SubsetMode::exact);
  EXPECT_EQ(s.color, Color::A);
  EXPECT_EQ(s.members.size(), 5u);
}

TEST(Monochromatic, TwoB1PairsAmongFour) {
  // {0,1} and {2,3} are B1, the rest A: any A-subset avoids both pairs.
  const RamseyColoring c = coloring_of(4, {{0, 1}, {2, 3}});
  const MonochromaticSubset s = monochromatic_subset(c, SubsetMode::exact);
  EXPECT_EQ(s.members.size(), brute_force_maximum(c));
  EXPECT_EQ(s.color, Color::A);
  EXPECT_EQ(s.members, (std::vector<std::size_t>{0, 2}));
}

TEST(Monochromatic, ExactMatchesBruteForce) {
  testing::Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    RamseyColoring c;
    c.size = 2 + i % 9;
    for (std::size_t p = 0; p < c.size * (c.size - 1) / 2; ++p) c.colors.push_back(static_cast<Color>(rng() % 4));
    const MonochromaticSubset exact = monochromatic_subset(c, SubsetMode::exact);
    EXPECT_EQ(exact.members.size(), brute_force_maximum(c));
    const MonochromaticSubset greedy = monochromatic_subset(c, SubsetMode::greedy);
    EXPECT_LE(greedy.members.size(), exact.members.size());
    for (const MonochromaticSubset* s : {&exact, &greedy}) {
      for (std::size_t a = 0; a < s->members.size(); ++a) {
        for (std::size_t b = a + 1; b < s->members.size(); ++b) {
          EXPECT_EQ(c.color(s->members[a], s->members[b]), s->color);
        }
      }
    }
  }
}

TEST(Monochromatic, ExactRefusesLargeFamilies) {
  EXPECT_THROW(monochromatic_subset(coloring_of(17, {}), SubsetMode::exact), InputError);
  EXPECT_EQ(monochromatic_subset(coloring_of(17, {}), SubsetMode::greedy).members.size(), 17u);
}

TEST(Attack, GenericOnSpikes) {
  const FunctionFamily spikes = fixtures::violating_spikes();
  const AttackResult r = attack(spikes, SpaceKind::generic);
  ASSERT_TRUE(std::holds_alternative<RefutationTrace>(r));
  const RefutationTrace& t = std::get<RefutationTrace>(r);
  EXPECT_EQ(t.mode, TraceMode::generic);
  EXPECT_EQ(t.pair, (PointPair{0, 2}));
  EXPECT_EQ(t.quotient, Rational(33, 32));
  EXPECT_TRUE(verify_trace(spikes, t));
  RefutationTrace forged = t;
  forged.quotient = Rational(2);
  EXPECT_FALSE(verify_trace(spikes, forged));
}

TEST(Attack, CertifiedTentsAreInconclusive) {
  const FunctionFamily tents = fixtures::tent_family();
  for (SpaceKind kind : {SpaceKind::generic}) {
    const AttackResult r = attack(tents, kind);
    ASSERT_TRUE(std::holds_alternative<Inconclusive>(r));
    EXPECT_EQ(std::get<Inconclusive>(r).reason, "certificate holds on this truncation");
  }
}

TEST(Attack, UdCase1Fixture) {
  testing::Rng rng(17);
  const SpacePtr s = ud(64);
  for (int i = 0; i < 10; ++i) {
    const FunctionFamily fam = testing::ud_case1_fixture(rng, s, 2 + i % 3);
    const AttackResult r = attack(fam, SpaceKind::ud);
    ASSERT_TRUE(std::holds_alternative<RefutationTrace>(r)) << std::get<Inconclusive>(r).reason;
    const RefutationTrace& t = std::get<RefutationTrace>(r);
    EXPECT_EQ(t.mode, TraceMode::case1);
    EXPECT_TRUE(verify_trace(fam, t));
    EXPECT_EQ(oracle::combination_quotient(fam, t.coefficients, t.pair), oracle::to_mpq(t.quotient));
    EXPECT_GT(t.quotient, Rational(1));
    ASSERT_TRUE(t.margin.has_value());
  }
}

TEST(Attack, UdModeNeedsPointLabels) {
  const FunctionFamily tents = fixtures::tent_family();
  EXPECT_THROW(attack(tents, SpaceKind::ud), InputError);
}

TEST(Attack, NonUnitMembers) {
  const SpacePtr s = ud(3);
  const FunctionFamily fam(s, {LipschitzFunction(s, {Rational(), Rational(3, 4), Rational()})}, {},
                           {PointPair{1, 2}});
  EXPECT_THROW(attack(fam, SpaceKind::generic), NotNormalizedError);
}

TEST(Attack, SoundOnCertifiedRandomFamilies) {
  testing::Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const SpacePtr s = share(testing::random_metric(rng, 3 + i % 8));
    const FunctionFamily fam = testing::random_family(rng, s, 1 + i % 3);
    const bool certified = std::holds_alternative<Certificate>(certify_c0(fam));
    const AttackResult r = attack(fam, SpaceKind::generic);
    EXPECT_EQ(certified, std::holds_alternative<Inconclusive>(r));
  }
}

FunctionFamily shared_pair(const char* second_value) {
  const SpacePtr s = share(SpaceGenerator(GeneratorKind::proper_counterexample).truncate(3));
  const LipschitzFunction f1(s, {Rational(), Rational(1), Rational()});
  const LipschitzFunction f2(s, {Rational(), Rational(), Rational::parse(second_value)});
  return FunctionFamily(s, {f1, f2}, {}, {PointPair{0, 1}, PointPair{0, 2}});
}

TEST(SharedZero, QuotientNineEighths) {
  for (const char* v : {"2", "-2"}) {
    const FunctionFamily fam = shared_pair(v);
    const AttackResult r = shared_zero_attack(fam);
    ASSERT_TRUE(std::holds_alternative<RefutationTrace>(r));
    const RefutationTrace& t = std::get<RefutationTrace>(r);
    EXPECT_EQ(t.quotient, Rational(9, 8));
    EXPECT_EQ(t.pair, (PointPair{1, 2}));
    EXPECT_TRUE(verify_trace(fam, t));
  }
}

TEST(SharedZero, ConstancyFailureIsReported) {
  const SpacePtr s = share(SpaceGenerator(GeneratorKind::proper_counterexample).truncate(3));
  const LipschitzFunction f1(s, {Rational(), Rational(1), Rational(1)});
  const LipschitzFunction f2(s, {Rational(), Rational(1), Rational(2)});
  const FunctionFamily fam(s, {f1, f2}, {}, {PointPair{0, 1}, PointPair{0, 2}});
  const AttackResult r = shared_zero_attack(fam);
  ASSERT_TRUE(std::holds_alternative<Inconclusive>(r));
  EXPECT_TRUE(std::get<Inconclusive>(r).constancy.has_value());
}

TEST(SharedZero, RequiresBaseInEveryWitness) {
  const SpacePtr s = ud(4);
  const FunctionFamily fam = distance_family(s, {{1, 2}, {3, 2}});
  EXPECT_THROW(shared_zero_attack(fam), InputError);
}

TEST(SharedZero, GeneratedFixtures) {
  testing::Rng rng(31);
  const SpacePtr s = share(SpaceGenerator(GeneratorKind::proper_counterexample).truncate(40));
  for (int i = 0; i < 10; ++i) {
    const testing::SharedBaseFixture fx = testing::shared_base_fixture(rng, s, 2 + i % 3);
    const AttackResult r = shared_zero_attack(fx.family);
    ASSERT_TRUE(std::holds_alternative<RefutationTrace>(r));
    EXPECT_TRUE(verify_trace(fx.family, std::get<RefutationTrace>(r)));
  }
}

}  // namespace
}  // namespace snac0
