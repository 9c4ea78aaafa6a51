#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "snac0/generators.hpp"
#include "snac0/lipschitz.hpp"
#include "snac0/metric_space.hpp"

namespace snac0::io {

/// Space files are JSON documents of one of three kinds:
///   {"kind": "explicit", "points": [...], "base": "...", "dist": [["p/q", ...], ...]}
///   {"kind": "<generator>", "params": {...}, "truncate": N}
///   {"kind": "fixture", "name": "hierarchical"}
/// Rationals are "p/q" strings. Emitted text is 2-space indented with a
/// trailing newline, so equal spaces give byte-identical files.
std::string space_to_json(const FiniteMetricSpace& space);
std::string generator_reference(const SpaceGenerator& gen, std::size_t truncate);
FiniteMetricSpace parse_space(std::string_view text);

std::string params_to_json(GeneratorKind kind, const GeneratorParams& params);
/// Reads the fields of a JSON object into params; unknown keys are rejected.
GeneratorParams parse_params(std::string_view json_object);

/// Construction name and parameters recorded in emitted family files.
struct Provenance {
  std::string construction;
  std::map<std::string, std::string> params;
};

/// {"space": <explicit space>, "functions": [{"name", "values", "witness"?}, ...]}
/// with every point listed in `values`.
std::string family_to_json(const FunctionFamily& family, const std::optional<Provenance>& provenance = std::nullopt);

/// "space" may be an inline space document or a path, resolved against
/// `base_dir` when relative. Unlisted points default to 0.
FunctionFamily parse_family(std::string_view text, const std::filesystem::path& base_dir = {});

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

FiniteMetricSpace load_space(const std::filesystem::path& path);
FunctionFamily load_family(const std::filesystem::path& path);

}  // namespace snac0::io
