#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vapp/report.hpp"

namespace vapp {

struct WorkbenchConfig {
  int max_exhaustive_size = 2;
  int sample_count = 200;
  std::uint64_t seed = 1;
  int workers = 1;
};

/// Outcome of a named verification suite: the aggregated law report plus
/// ordered key/value facts (counts, flags) for the structured output.
/// Facts never include timing, so reruns are byte-identical.
struct SuiteResult {
  std::string name;
  LawReport report;
  std::vector<std::pair<std::string, std::string>> facts;

  bool ok() const { return report.ok(); }
  void fact(std::string key, std::string value) {
    facts.emplace_back(std::move(key), std::move(value));
  }
};

const std::vector<std::string>& suite_names();

/// Runs one suite; StructuralError for unknown names.
SuiteResult run_suite(const std::string& name, const WorkbenchConfig& cfg);

/// All suites in name-list order, computed with up to cfg.workers threads;
/// the result order does not depend on scheduling.
std::vector<SuiteResult> run_all_suites(const WorkbenchConfig& cfg);

}  // namespace vapp
