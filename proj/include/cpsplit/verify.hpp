#pragma once

// Randomized property suites behind `cpsplit verify` and the acceptance run.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cpsplit {

struct CheckResult {
  std::string name;
  /// Largest normalized defect seen over all samples.
  double worst = 0.0;
  double tolerance = 0.0;
  long samples = 0;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Splitting consistency, finite-difference Jacobians, eigen and Jordan
/// residuals, block signatures, wave-strength reconstruction, U-property,
/// free-parameter invariance and the error3 sweep.
SuiteReport algebra_suite(std::uint64_t seed = kDefaultSeed, int samples = 1000);

/// Exact Riemann solver against reference star states and its own
/// consistency relations.
SuiteReport oracle_suite(std::uint64_t seed = kDefaultSeed, int samples = 200);

/// Discrete conservation, contact preservation, free-stream preservation
/// and the 1D embedding of the 2D solver.
SuiteReport conservation_suite(std::uint64_t seed = kDefaultSeed);

/// `which` is one of algebra, oracle, conservation or all. Throws
/// std::invalid_argument otherwise.
std::vector<SuiteReport> run_suites(std::string_view which, std::uint64_t seed = kDefaultSeed);

void print_report(std::ostream& os, const SuiteReport& report);

}  // namespace cpsplit
