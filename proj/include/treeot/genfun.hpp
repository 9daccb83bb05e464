#pragma once

// The density table g(l, n) of the three radial families and its generating
// functions. G(x, y) is never built as a bivariate object: only its x = q
// slice, the x-derivative at x = q, and the x^i slices gamma_i are needed.

#include <cstddef>
#include <vector>

#include "treeot/radial.hpp"
#include "treeot/rational.hpp"
#include "treeot/series.hpp"

namespace treeot {

inline constexpr std::size_t kDefaultOrder = 64;
inline constexpr std::size_t kDefaultGammaCount = 8;

enum class Family { Srw, Sphere, Ball };

/// g(l, n) for 0 <= l, n <= N.
class GTable {
 public:
  GTable(long q, std::size_t order);

  long q() const noexcept { return q_; }
  std::size_t order() const noexcept { return order_; }
  /// 0 outside the stored range.
  Rational at(long l, long n) const;
  void set(std::size_t l, std::size_t n, Rational value);
  /// The profile l -> g(l, n).
  RadialProfile column(std::size_t n) const;
  /// g(0, n) + sum_{l >= 1} (q+1) q^{l-1} g(l, n).
  Rational column_mass(std::size_t n) const;

 private:
  long q_;
  std::size_t order_;
  std::vector<std::vector<Rational>> g_;  // g_[l][n]
};

/// Errors: InvalidAlpha unless 0 <= alpha < 1.
void check_alpha(const Rational& alpha);

/// Lazy simple random walk: stay with probability alpha, else a uniform neighbor.
GTable srw_g_table(const Rational& alpha, long q, std::size_t order);
/// Uniform measure on the sphere of radius n.
GTable sphere_g_table(long q, std::size_t order);
/// Uniform measure on the ball of radius n.
GTable ball_g_table(long q, std::size_t order);

struct GFBundle {
  long q = 2;
  /// [y^n] G(q, y)
  Series1 G_at_q;
  /// [y^n] G1(q, y), G1 = dG/dx
  Series1 G1_at_q;
  /// gamma_i(y) = sum_n g(i, n) y^n; gammas[0] is the return series gamma.
  std::vector<Series1> gammas;

  std::size_t order() const noexcept { return G_at_q.order(); }
};

/// Columns of the table summed at x = q: sum_l g(l,n) q^l, sum_l l q^{l-1} g(l,n).
GFBundle bundle_from_table(const GTable& table, std::size_t gamma_count = kDefaultGammaCount);

/// Closed-form expansion of gamma, G(q,y), G1(q,y), gamma_i through the
/// square root of the discriminant. Errors: InvalidAlpha.
GFBundle srw_closed_form(const Rational& alpha, long q, std::size_t order,
                         std::size_t gamma_count = kDefaultGammaCount);

/// The discriminant ((q+1)/2)^2 (1 - alpha y)^2 - q (1 - alpha)^2 y^2.
Series1 srw_discriminant(const Rational& alpha, long q, std::size_t order);

GFBundle sphere_gf(long q, std::size_t order, std::size_t gamma_count = kDefaultGammaCount);
GFBundle ball_gf(long q, std::size_t order, std::size_t gamma_count = kDefaultGammaCount);

/// Every [x^k y^j] coefficient of
///   q x - [((q+1)(x - a x y) - q(1-a) y - (1-a) x^2 y) G + (-x + a x y + q(1-a) y) gamma]
/// vanishes for k <= N+1, j <= N, with gamma read from row l = 0 of the table.
bool check_functional_equation(const GTable& table, const Rational& alpha);

/// Bundle form: the x = q slice of the same identity and its x-derivative at
/// x = q (which involves G1), both to the bundle's order.
bool check_functional_equation(const GFBundle& bundle, const Rational& alpha);

/// W1 at time n in terms of [y^n] of G1(q,y), G(q,y) and gamma_0..gamma_delta.
/// Errors: OrderExceeded when n > order, InvalidParams when the bundle is for
/// another q or carries fewer than delta + 1 gamma series.
Rational w1_via_genfun(const GFBundle& bundle, const PairGeometry& geometry, std::size_t n);

}  // namespace treeot
