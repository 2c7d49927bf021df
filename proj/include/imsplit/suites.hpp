#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace imsplit {

struct SuiteOptions {
  /// 0 selects the suite's own default bound.
  int n_max = 0;
  int m_max = 0;
  uint64_t seed = 1;
  int jobs = 1;
  /// Random instances for the sampled suites (menger, identities); 0 = default.
  int samples = 0;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  /// Named tallies in a fixed order.
  std::vector<std::pair<std::string, long>> counters;
  /// Violations, each with the offending graph(s) as MGR text.
  std::vector<std::string> counterexamples;
  /// Recorded outcomes that are not failures (k = 2 anomalies, exceptions).
  std::vector<std::string> notes;

  long counter(std::string_view name) const;
};

/// menger, mader, identities, i4, evenk4, dingkanno, corollary, oracle.
const std::vector<std::string> &suite_names();

/// Throws kUnknownName for an unknown suite and kTooLarge past the guards.
SuiteReport run_suite(std::string_view name, const SuiteOptions &options);

nlohmann::ordered_json suite_report_to_json(const SuiteReport &report);

/// Runs body(i) for i in [0, count) on `jobs` threads. Callers write results
/// into slot i, so output order never depends on scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> &body);

}  // namespace imsplit
