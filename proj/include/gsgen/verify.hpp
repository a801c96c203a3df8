#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gsgen {

struct RuleReport {
  std::string rule;
  long long cases = 0;
  long long failures = 0;
  long long skipped = 0;  // inputs outside the representable class
  std::string first_failure;
};

struct VerifyReport {
  std::vector<RuleReport> rules;
  bool all_pass() const {
    for (const auto& r : rules)
      if (r.failures > 0) return false;
    return true;
  }
};

/// Checks every rewrite rule (CZ, local complementation, X/Y/Z
/// measurements, emission, push-out, all four fusion types and the failure
/// paths, both outcomes) against the dense oracle on `cases` random graphs
/// and redundant graphs of at most `max_qubits` physical qubits, with
/// tolerance `tol` on state equality up to global phase.
VerifyReport run_verification(int max_qubits, long long cases, uint64_t seed, double tol = 1e-8);

std::string format_report(const VerifyReport& report);

}  // namespace gsgen
