#pragma once

// Seeded property suites over every module's invariants.
//
// Case i of a run draws from Rng(case_seed(seed, i)), so a case replays on its own and cases
// may run in any order. A failing case is re-run at decreasing generator sizes with the same
// seed; the smallest size that still fails is reported as the minimized input.

#include "hm/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hm {

struct SuiteFailure {
  std::string property;
  std::uint64_t case_index = 0;
  std::uint64_t seed = 0;
  unsigned size = 0;
  std::string input;
  bool operator==(const SuiteFailure&) const = default;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;
  double wall_time_ms = 0;
  bool ok() const noexcept { return failures.empty(); }
};

struct SuiteOptions {
  // Negative control: metric-axioms draws corrupted distance tables.
  bool inject_fault = false;
  unsigned size = 6;
};

const std::vector<std::string>& suite_names();

// Cases are evaluated in parallel when OpenMP is available.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, std::size_t cases, const SuiteOptions& options = {});

// Single-threaded reference for run_suite.
SuiteReport run_suite_serial(std::string_view name, std::uint64_t seed, std::size_t cases,
                             const SuiteOptions& options = {});

// Structured report; wall time is the only field that varies between identical runs.
std::string report_json(const SuiteReport& report, bool include_wall_time = true);
std::string report_summary(const SuiteReport& report);

}  // namespace hm
