#pragma once

// Seeded property suites shared by the CLI `properties` command and the tests.

#include <cstdint>
#include <string>
#include <vector>

namespace wittcob {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures, then a summary line
  double seconds = 0;

  bool ok() const { return failures == 0 && cases > 0; }
};

/// Names of all suites in execution order.
std::vector<std::string> suite_names();

/// The suites backing the invariance checks: congruence invariance, the
/// Hilbert product formula, hyperbolic stabilization, skew vanishing and the
/// residue/Hasse equality agreement.
std::vector<std::string> invariance_suite_names();

/// Throws std::invalid_argument on an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases);

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, std::uint64_t seed, std::size_t cases);

}  // namespace wittcob
