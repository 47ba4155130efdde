#pragma once

#include <span>
#include <string>
#include <vector>

#include "lfuzz/fixtures.hpp"

namespace lfuzz {

/// Shared configuration for the proposition suites. Fixture generation is
/// deterministic in (lattice, max_x, seed); the quantifier budget and
/// sampling controls propagate to every function-space enumeration.
struct SuiteConfig {
  LatticePtr lattice;
  std::size_t max_x = 3;
  QuantifierConfig quant;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string id;
  ValidationReport report;
  double seconds = 0.0;
};

/// All registered suite ids, sorted.
std::vector<std::string> suite_ids();
bool is_suite_id(const std::string& id);

/// Runs one suite. Throws std::invalid_argument for unknown ids and
/// QuantifierBudgetError when an enumeration exceeds the budget.
SuiteResult run_suite(const std::string& id, const SuiteConfig& config);

/// Runs the given suites (or all of them for the single id "all"), sorted by
/// suite id.
std::vector<SuiteResult> run_suites(std::span<const std::string> ids, const SuiteConfig& config);

}  // namespace lfuzz
