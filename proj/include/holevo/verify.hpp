#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace holevo {

// Settings for the self-verification suites. fault_scale_c is a test hook:
// values other than 1 scale C inside the closed-form references, which must
// make the oracle-agreement suite fail (harness sensitivity check).
struct VerifyOptions {
  std::uint64_t seed = 20160331;
  int samples = 200;
  int grid_points = 20000;
  int threads = 0;
  double fault_scale_c = 1.0;
};

struct SuiteResult {
  std::string name;
  bool passed;
  int cases;
  std::string first_failure;  // empty when the suite passed
};

struct VerifyReport {
  std::uint64_t seed;
  int samples;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
};

// Runs, in order: oracle agreement (projective and weak), channel
// invariance, depolarizing equivalence, Kraus completeness, weak-operator
// properties. Deterministic for a fixed seed.
VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace holevo
