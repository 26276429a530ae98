#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

// Theorem-by-theorem reproduction suite, shared by the acceptance test and
// `kcover verify-paper`.
namespace kcover::checks {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::vector<int> only;  // empty = all
};

struct Criterion {
  int id;
  std::string title;
};

const std::vector<Criterion>& criteria();

using Progress = std::function<void(const CriterionResult&)>;

std::vector<CriterionResult> run_acceptance(const Options& options, const Progress& progress = {});

}  // namespace kcover::checks
