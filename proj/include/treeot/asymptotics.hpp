#pragma once

// Linear asymptotics W1(n) = A n + B + o(1) for the three radial families,
// the graph statistics and curvature derived from them, and the singular
// expansion of the return-probability series gamma(y).

#include <cstddef>
#include <string>
#include <vector>

#include "treeot/genfun.hpp"
#include "treeot/interval.hpp"
#include "treeot/rational.hpp"

namespace treeot {

std::string_view to_string(Family family);
/// "srw", "sphere" or "ball". Errors: InvalidParams.
Family parse_family(std::string_view name);

struct LinearAsymptotic {
  Rational A;
  Rational B;
  Family family = Family::Srw;
  Rational alpha;
  long d = 1;
  long q = 2;
  /// W1(n) equals A n + B exactly once n >= d (spheres only).
  bool exact_for_large_n = false;

  Rational at(long n) const { return A * n + B; }
};

/// Errors: InvalidAlpha, InvalidParams.
LinearAsymptotic srw_AB(const Rational& alpha, long d, long q);
LinearAsymptotic sphere_AB(long d, long q);
LinearAsymptotic ball_AB(long d, long q);
/// Dispatch on the family; alpha is ignored for spheres and balls.
LinearAsymptotic family_AB(Family family, const Rational& alpha, long d, long q);

/// q + 1 - q^{1 - delta'} - q^{-delta}, the factor shared by every A and by the B gaps.
Rational common_factor(long d, long q);

/// lim_{d -> infinity} A^SRW(alpha, d, q).
Rational srw_A_large_d(const Rational& alpha, long q);

struct HValues {
  Rational H1_at_1;
  Rational H1prime_at_1;
  Rational H_at_1;
};

/// [y^n] G1(q,y) ~ H1(1) n + (H1(1) - H1'(1)) and [y^n] G(q,y) ~ H(1) for SRW.
HValues h_values(const Rational& alpha, long q);

struct NamedCheck {
  std::string name;
  bool pass = false;
};

struct InequalityReport {
  LinearAsymptotic srw;
  LinearAsymptotic sphere;
  LinearAsymptotic ball;
  Rational srw_minus_sphere_B;
  Rational sphere_minus_ball_B;
  /// B^ball == 1/3, expected exactly at (d, q) = (1, 2).
  bool ball_equality = false;
  std::vector<NamedCheck> checks;

  bool all_pass() const;
};

InequalityReport verify_inequalities(const Rational& alpha, long d, long q);

struct ChiValues {
  Rational up_up;
  Rational up_down;
  Rational down_up;
  Rational down_down;
};

ChiValues chi_tree(const Rational& alpha, long q);

struct Curvature {
  Rational w1;
  Rational kappa;
  /// 1 - (A n + B) / d, from the asymptote.
  Rational kappa_asymptotic;
};

/// kappa = 1 - W1(m_X^n, m_Y^n) / d for the lazy walk, with W1 exact.
/// Errors: OrderExceeded when n > order, InvalidAlpha, InvalidParams.
Curvature kappa_curvature(const Rational& alpha, long d, long q, std::size_t n, std::size_t order = kDefaultOrder);

struct GammaAsymptotic {
  Rational alpha;
  long q = 2;
  /// Per-step growth rho^{-1} (alpha > 0) or per-even-step 4q/(q+1)^2 (alpha = 0).
  Interval growth_base;
  Interval leading_constant;
  /// Exponent of n in the leading term.
  Rational power = ratio(-3, 2);
  /// 1 for alpha > 0; 2 for alpha = 0, where odd coefficients vanish.
  int period = 1;

  /// Leading-term approximation of [y^m] gamma. For period 2, m odd gives 0 and
  /// m = 2k uses k as the step count.
  Interval leading_term(std::size_t m) const;
};

GammaAsymptotic gamma_asymptotic(const Rational& alpha, long q);

}  // namespace treeot
