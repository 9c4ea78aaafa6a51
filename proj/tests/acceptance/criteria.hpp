#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace snac0::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 20240611;
};

/// Runs all criteria in order; `on_result` is called as each one finishes.
std::vector<CriterionResult> run_all(const Options& options,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// One line: "PASS  3  title: detail (1.23 s)".
std::string format(const CriterionResult& result);

}  // namespace snac0::acceptance
