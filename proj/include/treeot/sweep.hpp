#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "treeot/asymptotics.hpp"
#include "treeot/genfun.hpp"
#include "treeot/rational.hpp"

namespace treeot {

struct SweepSpec {
  Family family = Family::Srw;
  /// Ignored (treated as a single placeholder) for spheres and balls.
  std::vector<Rational> alphas{Rational(0)};
  long d_min = 1, d_max = 1;
  long q_min = 2, q_max = 2;
  long n_min = 0, n_max = 20;
  std::size_t order = kDefaultOrder;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct SweepRow {
  Family family = Family::Srw;
  Rational alpha;
  long d = 1;
  long q = 2;
  long n = 0;
  Rational w1;
  Rational asym;
  /// Computation path for w1; the value is also checked against the
  /// potential-side sum before the row is accepted.
  std::string provenance;

  Rational residual() const { return w1 - asym; }
};

/// Errors: InvalidParams (empty ranges), OrderExceeded (n_max > order),
/// InvalidAlpha; an internal disagreement between the two W1 paths throws
/// InvalidParams as well, since it can only mean corrupted input tables.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr const char* kSweepCsvHeader = "family,alpha,d,q,n,w1_exact,w1_decimal,asym,residual";

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

}  // namespace treeot
