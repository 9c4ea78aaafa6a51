#pragma once

#include <json.hpp>

#include "snac0/certify.hpp"
#include "snac0/constructions.hpp"
#include "snac0/metric_space.hpp"
#include "snac0/petr.hpp"
#include "snac0/refuter.hpp"

namespace snac0::report {

using json = nlohmann::ordered_json;

json rational(const Rational& r);
json pair(const FiniteMetricSpace& space, PointPair p);

json validation(const FiniteMetricSpace& space, const MetricValidation& v);
json norms(const FunctionFamily& family);
json witnesses(const FunctionFamily& family);
json certify(const FunctionFamily& family, const CertifyResult& result);
json not_normalized(const FunctionFamily& family, std::size_t member);
json attack(const FunctionFamily& family, const AttackResult& result);
json petr(const FiniteMetricSpace& space, const PetrState& state);
json case1(const Case1Selection& selection);

}  // namespace snac0::report
