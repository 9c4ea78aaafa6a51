#include "snac0/fixtures.hpp"

#include <algorithm>
#include <array>
#include <memory>

#include "snac0/constructions.hpp"
#include "snac0/error.hpp"
#include "snac0/generators.hpp"

namespace snac0::fixtures {

namespace {

struct Leaf {
  int a;
  int b;
  int c;
};

std::vector<Leaf> leaves() {
  std::vector<Leaf> out;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      for (int c = 0; c < 8; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

std::string leaf_label(const Leaf& l) {
  return "x" + std::to_string(l.a) + "." + std::to_string(l.b) + "." + std::to_string(l.c);
}

// Centers (c = 0) come first so that the greedy nets pick them before members.
std::vector<Leaf> centers_first(std::vector<Leaf> all) {
  std::stable_partition(all.begin(), all.end(), [](const Leaf& l) { return l.c == 0; });
  return all;
}

}  // namespace

FiniteMetricSpace hierarchical() {
  const std::vector<Leaf> pts = centers_first(leaves());
  std::vector<std::string> labels;
  for (const Leaf& l : pts) labels.push_back(leaf_label(l));
  const Rational top(1, 2), mid(1, 8), spoke(3, 32), rim(1, 16);
  return FiniteMetricSpace::from_symmetric(std::move(labels), 0, [&](std::size_t i, std::size_t j) {
    const Leaf& x = pts[i];
    const Leaf& y = pts[j];
    if (x.a != y.a) return top;
    if (x.b != y.b) return mid;
    return (x.c == 0 || y.c == 0) ? spoke : rim;
  });
}

FiniteMetricSpace ultrametric_hierarchy() {
  const std::vector<Leaf> pts = leaves();
  std::vector<std::string> labels;
  for (const Leaf& l : pts) labels.push_back(leaf_label(l));
  const std::array<Rational, 3> scales{Rational(1, 2), Rational(1, 8), Rational(1, 32)};
  return FiniteMetricSpace::from_symmetric(std::move(labels), 0, [&](std::size_t i, std::size_t j) {
    const Leaf& x = pts[i];
    const Leaf& y = pts[j];
    if (x.a != y.a) return scales[0];
    if (x.b != y.b) return scales[1];
    return scales[2];
  });
}

FiniteMetricSpace concentration() {
  // depth 0: c0..c3; depth 1 under c0: s1..s3; depth 2 under c0: t1..t16.
  // Distance is the scale of the highest level at which two points split.
  struct Node {
    std::string label;
    int top;    // which c
    int child;  // 0 = the c0 core, 1..3 = s_i
  };
  std::vector<Node> nodes;
  for (int i = 0; i < 4; ++i) nodes.push_back({"c" + std::to_string(i), i, 0});
  for (int i = 1; i <= 3; ++i) nodes.push_back({"s" + std::to_string(i), 0, i});
  for (int i = 1; i <= 16; ++i) nodes.push_back({"t" + std::to_string(i), 0, 0});
  std::vector<std::string> labels;
  for (const Node& n : nodes) labels.push_back(n.label);
  return FiniteMetricSpace::from_symmetric(std::move(labels), 0, [&](std::size_t i, std::size_t j) {
    const Node& x = nodes[i];
    const Node& y = nodes[j];
    if (x.top != y.top) return Rational(1);
    if (x.child != y.child) return Rational(1, 4);
    return Rational(1, 16);
  });
}

FunctionFamily tent_family() {
  const SpaceGenerator ud(GeneratorKind::ud_counterexample);
  const std::vector<FiniteMetricSpace> parts(4, ud.truncate(3));
  auto space = std::make_shared<const FiniteMetricSpace>(disjoint_sum(parts, Rational(3)));
  TentSpec spec;
  for (int c = 1; c <= 4; ++c) {
    const std::string prefix = "m" + std::to_string(c) + ".";
    spec.pairs.push_back({space->index_of(prefix + "p1"), space->index_of(prefix + "p2")});
  }
  return snac0::tent_family(space, spec);
}

FunctionFamily violating_spikes() {
  const SpaceGenerator ud(GeneratorKind::ud_counterexample);
  auto space = std::make_shared<const FiniteMetricSpace>(ud.truncate(4));
  std::vector<LipschitzFunction> members;
  members.emplace_back(space, std::vector<Rational>{0, Rational(-3, 2), Rational(-3, 4), Rational(-3, 4)});
  members.emplace_back(space, std::vector<Rational>{0, 0, Rational(5, 8), Rational(-5, 8)});
  std::vector<std::optional<PointPair>> witnesses{PointPair{0, 1}, PointPair{2, 3}};
  return FunctionFamily(space, std::move(members), {}, std::move(witnesses));
}

const std::vector<std::string>& space_names() {
  static const std::vector<std::string> names{"hierarchical", "ultrametric", "concentration"};
  return names;
}

FiniteMetricSpace by_name(std::string_view name) {
  if (name == "hierarchical") return hierarchical();
  if (name == "ultrametric") return ultrametric_hierarchy();
  if (name == "concentration") return concentration();
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace snac0::fixtures
