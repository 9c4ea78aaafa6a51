#pragma once

#include <memory>
#include <string>
#include <vector>

#include "snac0/lipschitz.hpp"
#include "snac0/metric_space.hpp"

namespace snac0::unit {

inline Rational q(const char* text) { return Rational::parse(text); }

inline SpacePtr share(FiniteMetricSpace space) {
  return std::make_shared<const FiniteMetricSpace>(std::move(space));
}

inline std::vector<Rational> values(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(Rational::parse(t));
  return out;
}

// Three points a, b, c (base a) with the given distances.
inline FiniteMetricSpace triangle(const char* ab, const char* ac, const char* bc) {
  return FiniteMetricSpace({"a", "b", "c"}, "a",
                           {{q("0"), q(ab), q(ac)}, {q(ab), q("0"), q(bc)}, {q(ac), q(bc), q("0")}});
}

}  // namespace snac0::unit
