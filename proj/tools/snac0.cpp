// snac0: command-line front end for the snac0 core library.
//
// Exit codes: 0 success or certified, 1 violation or refutation found,
// 2 input or precondition error, 3 internal consistency failure.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "criteria.hpp"
#include "report.hpp"
#include "snac0/certify.hpp"
#include "snac0/constructions.hpp"
#include "snac0/error.hpp"
#include "snac0/fixtures.hpp"
#include "snac0/generators.hpp"
#include "snac0/io.hpp"
#include "snac0/petr.hpp"
#include "snac0/refuter.hpp"

namespace {

using namespace snac0;
using report::json;

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

struct Config {
  std::string space;
  std::string family;
  std::string out;
  std::string mode = "generic";
  std::size_t n = 0;
  std::string kind;
  std::string tau = "1/2";
  std::uint64_t seed = 20240611;
  std::size_t levels = 2;
  std::size_t count = 1;
  std::string gap;
  std::string closeness;
  std::string params;
  std::string pairs;
  std::string name;
  bool reference = false;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    io::write_file(cfg.out, text);
  }
}

void emit(const Config& cfg, const json& doc) { emit(cfg, doc.dump(2) + "\n"); }

SpacePtr load_space(const Config& cfg) {
  if (cfg.space.empty()) throw InputError("--space is required");
  return std::make_shared<const FiniteMetricSpace>(io::load_space(cfg.space));
}

FunctionFamily load_family(const Config& cfg) {
  if (cfg.family.empty()) throw InputError("--family is required");
  return io::load_family(cfg.family);
}

GeneratorParams params_of(const Config& cfg) {
  GeneratorParams p = cfg.params.empty() ? GeneratorParams{} : io::parse_params(cfg.params);
  if (!cfg.gap.empty()) p.gap = Rational::parse(cfg.gap);
  return p;
}

// "x1:y1,x2:y2" in point labels.
std::vector<PointPair> parse_pairs(const FiniteMetricSpace& space, const std::string& text) {
  if (text.empty()) throw InputError("--pairs is required (format x1:y1,x2:y2)");
  std::vector<PointPair> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw InputError("pair '" + item + "' is not of the form x:y");
    out.push_back({space.index_of(item.substr(0, colon)), space.index_of(item.substr(colon + 1))});
    start = end + 1;
  }
  return out;
}

io::Provenance provenance(std::string construction, std::map<std::string, std::string> params) {
  return {std::move(construction), std::move(params)};
}

int run_gen(const Config& cfg) {
  if (cfg.kind.empty()) throw InputError("--kind is required");
  const SpaceGenerator gen(parse_generator_kind(cfg.kind), params_of(cfg));
  if (cfg.n == 0) throw InputError("--n is required");
  emit(cfg, cfg.reference ? io::generator_reference(gen, cfg.n) : io::space_to_json(gen.truncate(cfg.n)));
  return kOk;
}

int run_validate(const Config& cfg) {
  const SpacePtr space = load_space(cfg);
  const MetricValidation v = validate_metric(*space);
  emit(cfg, report::validation(*space, v));
  return v.ok() ? kOk : kFound;
}

int run_lipnorm(const Config& cfg) {
  emit(cfg, report::norms(load_family(cfg)));
  return kOk;
}

int run_sna(const Config& cfg) {
  emit(cfg, report::witnesses(load_family(cfg)));
  return kOk;
}

int run_certify(const Config& cfg) {
  const FunctionFamily family = load_family(cfg);
  try {
    const CertifyResult result = certify_c0(family);
    emit(cfg, report::certify(family, result));
    return std::holds_alternative<Certificate>(result) ? kOk : kFound;
  } catch (const NotNormalizedError& e) {
    emit(cfg, report::not_normalized(family, e.member()));
    throw;
  }
}

int run_refute(const Config& cfg) {
  const FunctionFamily family = load_family(cfg);
  const AttackResult result =
      (cfg.mode == "shared" || cfg.mode == "shared-base") ? shared_zero_attack(family) : attack(family, parse_space_kind(cfg.mode));
  if (const auto* t = std::get_if<RefutationTrace>(&result); t && !verify_trace(family, *t)) {
    throw InternalError("refutation trace does not recompute");
  }
  emit(cfg, report::attack(family, result));
  return std::holds_alternative<RefutationTrace>(result) ? kFound : kOk;
}

int run_tent(const Config& cfg) {
  const SpacePtr space = load_space(cfg);
  const FunctionFamily family = tent_family(space, TentSpec{parse_pairs(*space, cfg.pairs)});
  emit(cfg, io::family_to_json(family, provenance("tent_family", {{"pairs", cfg.pairs}})));
  return kOk;
}

int run_spike(const Config& cfg) {
  const SpacePtr space = load_space(cfg);
  SpikeSpec spec;
  spec.pairs = parse_pairs(*space, cfg.pairs);
  const FunctionFamily family = spike_family(space, spec);
  emit(cfg, io::family_to_json(family, provenance("spike_family", {{"pairs", cfg.pairs}})));
  return kOk;
}

int run_case1(const Config& cfg) {
  if (!cfg.kind.empty() && parse_generator_kind(cfg.kind) != GeneratorKind::shrinking_satellites) {
    throw InputError("case1 needs --kind satellites");
  }
  const SpaceGenerator gen(GeneratorKind::shrinking_satellites, params_of(cfg));
  const Case1Result res = case1_select(gen, cfg.count);
  std::map<std::string, std::string> params{{"count", std::to_string(cfg.count)},
                                            {"generator", io::params_to_json(gen.kind(), gen.params())}};
  std::string selection;
  for (std::size_t i = 0; i < res.selection.centers.size(); ++i) {
    if (i) selection += ",";
    selection += res.selection.centers[i] + ":" + res.selection.satellites[i];
  }
  params["pairs"] = selection;
  emit(cfg, io::family_to_json(res.family, provenance("case1_select", params)));
  return kOk;
}

int run_gamma(const Config& cfg) {
  const SpacePtr space = load_space(cfg);
  if (cfg.closeness.empty()) throw InputError("--closeness is required");
  const Rational closeness = Rational::parse(cfg.closeness);
  const PetrState state = petr_extract(*space, cfg.levels, Rational::parse(cfg.tau));
  const FunctionFamily family = gamma_compose(space, state.L, closeness);
  emit(cfg, io::family_to_json(family, provenance("gamma_compose", {{"closeness", closeness.str()},
                                                                    {"levels", std::to_string(cfg.levels)},
                                                                    {"tau", Rational::parse(cfg.tau).str()}})));
  return kOk;
}

int run_petr(const Config& cfg) {
  const SpacePtr space = load_space(cfg);
  const PetrState state = petr_extract(*space, cfg.levels, Rational::parse(cfg.tau));
  json doc = report::petr(*space, state);
  doc["discrete"] = discreteness_check(*space, state.L, state).ok;
  emit(cfg, doc);
  return kOk;
}

// Built-in fixtures: the two families, or any named space.
int run_fixture(const Config& cfg) {
  if (cfg.name == "tent_family") {
    emit(cfg, io::family_to_json(fixtures::tent_family(), provenance("tent_family", {{"gap", "3"}, {"pairs", "p1:p2"}})));
  } else if (cfg.name == "violating_spikes") {
    emit(cfg, io::family_to_json(fixtures::violating_spikes(), provenance("violating_spikes", {})));
  } else {
    emit(cfg, io::space_to_json(fixtures::by_name(cfg.name)));
  }
  return kOk;
}

int run_selftest(const Config& cfg) {
  acceptance::Options options;
  options.seed = cfg.seed;
  bool ok = true;
  acceptance::run_all(options, [&](const acceptance::CriterionResult& r) {
    std::cout << acceptance::format(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates and refutations for Lipschitz function families on finite metric spaces"};
  app.require_subcommand(1);
  Config cfg;
  int status = kOk;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Config&);
  };
  const Command commands[] = {
      {"gen", "emit a space file from a generator truncation", run_gen},
      {"validate", "check the metric axioms of a space file", run_validate},
      {"lipnorm", "exact Lipschitz norm of each family member", run_lipnorm},
      {"sna", "pairs where each member attains its norm", run_sna},
      {"certify", "decide the isometric c0 certificate for a family", run_certify},
      {"refute", "attack a family (--mode ud|proper|generic|shared)", run_refute},
      {"tent", "tent family on --pairs of a space", run_tent},
      {"spike", "spike family on --pairs of a space", run_spike},
      {"case1", "greedy pair selection on a shrinking-satellites generator", run_case1},
      {"gamma", "tents on the points extracted by petr", run_gamma},
      {"petr", "extract a discrete subset through separated nets", run_petr},
      {"fixture", "emit a built-in fixture (tent_family, violating_spikes or a space name)", run_fixture},
      {"selftest", "run the acceptance criteria", run_selftest},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--space", cfg.space, "space file");
    sub->add_option("--family", cfg.family, "family file");
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
    sub->add_option("--mode", cfg.mode, "attack mode");
    sub->add_option("--n", cfg.n, "truncation size");
    sub->add_option("--kind", cfg.kind, "generator kind");
    sub->add_option("--tau", cfg.tau, "quota fraction for petr");
    sub->add_option("--seed", cfg.seed, "seed for randomized suites");
    sub->add_option("--levels", cfg.levels, "number of extraction levels");
    sub->add_option("--count", cfg.count, "number of pairs to select");
    sub->add_option("--gap", cfg.gap, "gap between copies (disjoint_sum)");
    sub->add_option("--closeness", cfg.closeness, "closeness bound for gamma");
    sub->add_option("--params", cfg.params, "generator parameters as a JSON object");
    sub->add_option("--pairs", cfg.pairs, "point pairs x1:y1,x2:y2");
    sub->add_option("--name", cfg.name, "fixture name");
    sub->add_flag("--reference", cfg.reference, "gen: emit the generator reference instead of the matrix");
    sub->callback([&status, &cfg, run = c.run] { status = run(cfg); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return status;
}
