#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcr {

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 25;
  /// Mutation hook: flips the sign of i*j in the built-in unit table.
  bool corrupt_quaternion_table = false;
};

struct InvariantResult {
  std::string module;
  std::string invariant;
  bool passed = true;
  std::size_t trials = 0;
  /// Smallest failing input (trials run in increasing size), empty on success.
  std::string reproducer;
};

struct SelftestSummary {
  std::vector<InvariantResult> results;

  std::size_t passed() const;
  std::size_t failed() const;
};

/// Desk-scale run of the invariant suites of every module.
SelftestSummary run_selftest(const SelftestOptions& options);

}  // namespace qcr
