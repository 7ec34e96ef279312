#pragma once

// Batch verification of the finite classification results: every check is
// recomputed from scratch and cross-checked against an exhaustive oracle.

#include <cstdint>
#include <string>
#include <vector>

namespace gex2 {

struct CheckResult {
  std::string name;
  std::string anchor;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> entries;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }

  /// One line per check plus a summary line.
  std::string to_text(bool with_timing = true) const;
  std::string to_json(bool with_timing = true) const;
};

/// Runs every check. `seed` drives the randomized sweeps.
VerificationReport verify_all(std::uint64_t seed);

}  // namespace gex2
