#pragma once

// Self-check suites behind `treeot verify`. Each suite compares two
// independent computations of the same quantity and records one case per
// comparison.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace treeot {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CaseResult> cases;

  bool pass() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Random tree instances for the duality suite.
  int duality_instances = 500;
  /// Random profiles per (q, d) cell for the triple suite.
  int triple_profiles = 50;
};

SuiteReport verify_duality_suite(const VerifyOptions& options);
SuiteReport verify_triple_suite(const VerifyOptions& options);
SuiteReport verify_series_suite(const VerifyOptions& options);
SuiteReport verify_inequalities_suite(const VerifyOptions& options);
SuiteReport verify_oeis_suite(const VerifyOptions& options);
SuiteReport verify_gamma_suite(const VerifyOptions& options);

/// Suite names: all, duality, triple, series, inequalities, oeis, gamma.
/// Errors: InvalidParams for an unknown name.
std::vector<SuiteReport> run_verify(std::string_view suite, const VerifyOptions& options);

}  // namespace treeot
