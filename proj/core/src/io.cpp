#include "snac0/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "snac0/error.hpp"
#include "snac0/fixtures.hpp"

namespace snac0::io {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string as_string(const json& v, const char* what) {
  if (!v.is_string()) throw InputError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

Rational as_rational(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw InputError("rationals must be \"p/q\" strings, got " + v.dump());
}

std::size_t as_count(const json& v, const char* what) {
  if (!v.is_number_unsigned()) throw InputError(std::string(what) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

json space_object(const FiniteMetricSpace& space) {
  json doc;
  doc["kind"] = "explicit";
  doc["points"] = space.points();
  doc["base"] = space.label(space.base());
  json rows = json::array();
  for (PointIndex i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (PointIndex j = 0; j < space.size(); ++j) row.push_back(space.distance(i, j).str());
    rows.push_back(std::move(row));
  }
  doc["dist"] = std::move(rows);
  return doc;
}

json params_object(GeneratorKind kind, const GeneratorParams& p) {
  json out = json::object();
  switch (kind) {
    case GeneratorKind::proper_counterexample:
      if (p.epsilons.empty()) {
        out["eps_limit"] = p.eps_limit.str();
        out["eps_scale"] = p.eps_scale.str();
      } else {
        json list = json::array();
        for (const Rational& e : p.epsilons) list.push_back(e.str());
        out["epsilons"] = std::move(list);
      }
      break;
    case GeneratorKind::shrinking_satellites:
      out["ratio"] = p.ratio.str();
      out["radius_factor"] = p.radius_factor.str();
      out["center_count"] = p.center_count;
      break;
    case GeneratorKind::disjoint_sum:
      out["gap"] = p.gap.str();
      break;
    default:
      break;
  }
  return out;
}

GeneratorParams params_from(const json& obj) {
  GeneratorParams p;
  if (obj.is_null()) return p;
  if (!obj.is_object()) throw InputError("generator params must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (key == "eps_limit") {
      p.eps_limit = as_rational(value);
    } else if (key == "eps_scale") {
      p.eps_scale = as_rational(value);
    } else if (key == "epsilons") {
      if (!value.is_array()) throw InputError("epsilons must be an array");
      for (const json& e : value) p.epsilons.push_back(as_rational(e));
    } else if (key == "ratio") {
      p.ratio = as_rational(value);
    } else if (key == "radius_factor") {
      p.radius_factor = as_rational(value);
    } else if (key == "center_count") {
      p.center_count = as_count(value, "center_count");
    } else if (key == "gap") {
      p.gap = as_rational(value);
    } else {
      throw InputError("unknown generator parameter '" + key + "'");
    }
  }
  return p;
}

FiniteMetricSpace space_from(const json& doc) {
  const std::string kind = as_string(field(doc, "kind"), "kind");
  if (kind == "explicit") {
    const json& pts = field(doc, "points");
    if (!pts.is_array()) throw InputError("points must be an array");
    std::vector<std::string> labels;
    for (const json& p : pts) labels.push_back(as_string(p, "point label"));
    const json& rows = field(doc, "dist");
    if (!rows.is_array()) throw InputError("dist must be an array of rows");
    std::vector<std::vector<Rational>> dist;
    for (const json& row : rows) {
      if (!row.is_array()) throw InputError("dist must be an array of rows");
      std::vector<Rational> r;
      for (const json& v : row) r.push_back(as_rational(v));
      dist.push_back(std::move(r));
    }
    return FiniteMetricSpace(std::move(labels), as_string(field(doc, "base"), "base"), dist);
  }
  if (kind == "fixture") return fixtures::by_name(as_string(field(doc, "name"), "fixture name"));
  const SpaceGenerator gen(parse_generator_kind(kind), params_from(doc.value("params", json())));
  return gen.truncate(as_count(field(doc, "truncate"), "truncate"));
}

}  // namespace

std::string space_to_json(const FiniteMetricSpace& space) { return dump(space_object(space)); }

std::string generator_reference(const SpaceGenerator& gen, std::size_t truncate) {
  json doc;
  doc["kind"] = generator_kind_name(gen.kind());
  doc["params"] = params_object(gen.kind(), gen.params());
  doc["truncate"] = truncate;
  return dump(doc);
}

FiniteMetricSpace parse_space(std::string_view text) { return space_from(parse_json(text, "space file")); }

std::string params_to_json(GeneratorKind kind, const GeneratorParams& params) {
  return params_object(kind, params).dump();
}

GeneratorParams parse_params(std::string_view json_object) {
  return params_from(parse_json(json_object, "generator params"));
}

std::string family_to_json(const FunctionFamily& family, const std::optional<Provenance>& provenance) {
  const FiniteMetricSpace& space = family.space();
  json doc;
  if (provenance) {
    json prov;
    prov["construction"] = provenance->construction;
    prov["params"] = provenance->params;
    doc["provenance"] = std::move(prov);
  }
  doc["space"] = space_object(space);
  json functions = json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    json f;
    f["name"] = family.name(i);
    json values = json::object();
    for (PointIndex p = 0; p < space.size(); ++p) values[space.label(p)] = family.member(i)(p).str();
    f["values"] = std::move(values);
    if (const auto& w = family.witness(i)) f["witness"] = {space.label(w->p), space.label(w->q)};
    functions.push_back(std::move(f));
  }
  doc["functions"] = std::move(functions);
  return dump(doc);
}

FunctionFamily parse_family(std::string_view text, const std::filesystem::path& base_dir) {
  const json doc = parse_json(text, "family file");
  const json& space_ref = field(doc, "space");
  SpacePtr space;
  if (space_ref.is_string()) {
    std::filesystem::path path = space_ref.get<std::string>();
    if (path.is_relative()) path = base_dir / path;
    space = std::make_shared<const FiniteMetricSpace>(load_space(path));
  } else {
    space = std::make_shared<const FiniteMetricSpace>(space_from(space_ref));
  }
  const json& functions = field(doc, "functions");
  if (!functions.is_array()) throw InputError("functions must be an array");
  std::vector<LipschitzFunction> members;
  std::vector<std::string> names;
  std::vector<std::optional<PointPair>> witnesses;
  for (const json& f : functions) {
    names.push_back(as_string(field(f, "name"), "function name"));
    std::vector<Rational> values(space->size());
    const json& vals = field(f, "values");
    if (!vals.is_object()) throw InputError("values must be an object keyed by point label");
    for (const auto& [label, v] : vals.items()) values[space->index_of(label)] = as_rational(v);
    members.emplace_back(space, std::move(values));
    if (f.contains("witness") && !f.at("witness").is_null()) {
      const json& w = f.at("witness");
      if (!w.is_array() || w.size() != 2) throw InputError("witness must be a pair of point labels");
      witnesses.emplace_back(PointPair{space->index_of(as_string(w[0], "witness point")),
                                       space->index_of(as_string(w[1], "witness point"))});
    } else {
      witnesses.emplace_back(std::nullopt);
    }
  }
  return FunctionFamily(space, std::move(members), std::move(names), std::move(witnesses));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed for " + path.string());
}

FiniteMetricSpace load_space(const std::filesystem::path& path) { return parse_space(read_file(path)); }

FunctionFamily load_family(const std::filesystem::path& path) {
  return parse_family(read_file(path), path.parent_path());
}

}  // namespace snac0::io
