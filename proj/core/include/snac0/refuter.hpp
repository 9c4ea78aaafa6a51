#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "snac0/certify.hpp"
#include "snac0/lipschitz.hpp"

namespace snac0 {

enum class Color { A, B1, B2, B3 };

const char* color_name(Color color) noexcept;

/// declared: witness pairs as given. ascending: each pair reordered so that
/// the first point has the smaller index p<k> (proper space convention).
enum class Orientation { declared, ascending };

struct RamseyColoring {
  std::size_t size = 0;
  std::vector<PointPair> pairs;  // oriented witness pair of each member
  std::vector<Color> colors;     // index pairs (n < m), row-major

  Color color(std::size_t n, std::size_t m) const;
};

/// A: disjoint witness pairs; B1: x_n = x_m; B2: y_n = y_m; B3: x_n = y_m or
/// x_m = y_n. Identical pairs fall in B1 (first matching color wins).
RamseyColoring color_pairs(const FunctionFamily& family, Orientation orientation = Orientation::declared);

enum class SubsetMode { exact, greedy };

struct MonochromaticSubset {
  Color color = Color::A;
  std::vector<std::size_t> members;
};

/// exact: maximum monochromatic subset by branch and bound (at most 16
/// members); greedy: first-fit in index order per color. Ties go to the color
/// order A < B1 < B2 < B3, then to the lexicographically smallest subset.
MonochromaticSubset monochromatic_subset(const RamseyColoring& coloring, SubsetMode mode);

enum class SpaceKind { ud, proper, generic };

SpaceKind parse_space_kind(std::string_view name);
const char* space_kind_name(SpaceKind kind) noexcept;

enum class TraceMode {
  case1,
  case2,
  proper_a0b0,
  proper_a0b1,
  proper_a1b0,
  proper_a1b1,
  proper_case2,
  generic,
};

const char* trace_mode_name(TraceMode mode) noexcept;

struct NamedValue {
  std::string name;
  Rational value;
};

/// f = sum_i coefficients[i] * f_i has |f(p) - f(q)| / d(p, q) = quotient > 1.
struct RefutationTrace {
  TraceMode mode = TraceMode::generic;
  std::size_t n0 = 0;
  std::size_t m0 = 0;
  int delta = 1;  // coefficient of f_m0 relative to f_n0
  std::vector<Rational> coefficients;
  PointPair pair;
  Rational quotient;
  std::optional<Rational> constant;  // C_m0
  std::optional<Rational> margin;    // eps_n0 (ud) or eps_j(n0) (proper)
  std::vector<NamedValue> bounds;    // intermediate inequalities, as checked
};

struct Inconclusive {
  std::string reason;
  std::vector<std::string> failures;
  std::optional<ConstancyCounterexample> constancy;
};

using AttackResult = std::variant<RefutationTrace, Inconclusive>;

/// Recomputes the trace quotient from the raw values; true iff it matches and exceeds 1.
bool verify_trace(const FunctionFamily& family, const RefutationTrace& trace);

/// ud and proper modes follow the proof patterns on truncations whose points
/// are labeled p<k>; generic mode converts a certificate violation.
AttackResult attack(const FunctionFamily& family, SpaceKind kind);

/// Witness pairs all of the form (p0, y): evaluates s_n f_n - s_m f_m at
/// (y_n0, y_m0) for the first two members.
AttackResult shared_zero_attack(const FunctionFamily& family);

}  // namespace snac0
