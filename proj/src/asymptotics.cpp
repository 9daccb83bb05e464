#include "treeot/asymptotics.hpp"

#include "treeot/error.hpp"

namespace treeot {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Srw:
      return "srw";
    case Family::Sphere:
      return "sphere";
    case Family::Ball:
      return "ball";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "srw") return Family::Srw;
  if (name == "sphere") return Family::Sphere;
  if (name == "ball") return Family::Ball;
  throw Error(ErrorCode::InvalidParams, "unknown family '" + std::string(name) + "'");
}

Rational common_factor(long d, long q) {
  const auto g = make_geometry(q, d);
  return q + 1 - power(q, 1 - g.delta_prime()) - power(q, -g.delta());
}

LinearAsymptotic srw_AB(const Rational& alpha, long d, long q) {
  check_alpha(alpha);
  const auto g = make_geometry(q, d);
  const long dl = g.delta();
  const long dp = g.delta_prime();
  const Rational qp1 = q + 1;
  LinearAsymptotic out;
  out.family = Family::Srw;
  out.alpha = alpha;
  out.d = d;
  out.q = q;
  out.A = 2 * (1 - alpha) * common_factor(d, q) * (q - 1) / (qp1 * qp1);
  out.B = d + 2 * (dl * power(q, -dl) + dp * power(q, 1 - dp)) / qp1 +
          2 * (power(q, 1 - dl) - power(q, 1 - dp)) / (qp1 * qp1);
  return out;
}

LinearAsymptotic sphere_AB(long d, long q) {
  const auto g = make_geometry(q, d);
  const long dl = g.delta();
  const long dp = g.delta_prime();
  LinearAsymptotic out;
  out.family = Family::Sphere;
  out.d = d;
  out.q = q;
  out.exact_for_large_n = true;
  out.A = 2 * common_factor(d, q) / (q + 1);
  out.B = d + (-4 * q + 2 * (dp * (q - 1) + 1) * power(q, 1 - dp) + 2 * (dl * (q - 1) + q) * power(q, -dl)) /
                  Rational(q * q - 1);
  return out;
}

LinearAsymptotic ball_AB(long d, long q) {
  const auto g = make_geometry(q, d);
  const long dl = g.delta();
  const long dp = g.delta_prime();
  LinearAsymptotic out;
  out.family = Family::Ball;
  out.d = d;
  out.q = q;
  out.A = 2 * common_factor(d, q) / (q + 1);
  out.B = d + (-6 * q - 2 + 2 * (dp * (q - 1) + 2) * power(q, 1 - dp) + 2 * (dl * (q - 1) + q + 1) * power(q, -dl)) /
                  Rational(q * q - 1);
  return out;
}

LinearAsymptotic family_AB(Family family, const Rational& alpha, long d, long q) {
  switch (family) {
    case Family::Srw:
      return srw_AB(alpha, d, q);
    case Family::Sphere:
      return sphere_AB(d, q);
    case Family::Ball:
      return ball_AB(d, q);
  }
  throw Error(ErrorCode::InvalidParams, "unknown family");
}

Rational srw_A_large_d(const Rational& alpha, long q) {
  check_alpha(alpha);
  make_geometry(q, 1);
  // q^{1-delta'} and q^{-delta} vanish as d grows.
  return 2 * (1 - alpha) * (q - 1) / Rational(q + 1);
}

HValues h_values(const Rational& alpha, long q) {
  check_alpha(alpha);
  make_geometry(q, 1);
  const Rational qp1 = q + 1;
  HValues h;
  h.H1_at_1 = (1 - alpha) * (q - 1) / (qp1 * qp1);
  h.H1prime_at_1 = h.H1_at_1 - 2 * q / ((q - 1) * qp1 * qp1);
  h.H_at_1 = ratio(q, q + 1);
  return h;
}

bool InequalityReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

InequalityReport verify_inequalities(const Rational& alpha, long d, long q) {
  InequalityReport r;
  r.srw = srw_AB(alpha, d, q);
  r.sphere = sphere_AB(d, q);
  r.ball = ball_AB(d, q);
  r.srw_minus_sphere_B = r.srw.B - r.sphere.B;
  r.sphere_minus_ball_B = r.sphere.B - r.ball.B;
  const Rational factor = common_factor(d, q);
  const Rational third = ratio(1, 3);
  r.ball_equality = r.ball.B == third;

  auto add = [&](std::string name, bool pass) { r.checks.push_back({std::move(name), pass}); };
  add("A_srw > 0", sign(r.srw.A) > 0);
  add("A_srw < A_sphere", r.srw.A < r.sphere.A);
  add("A_sphere == A_ball", r.sphere.A == r.ball.A);
  add("A_ball < 2", r.ball.A < 2);
  add("B_srw > B_sphere", r.srw.B > r.sphere.B);
  add("B_sphere > B_ball", r.sphere.B > r.ball.B);
  add("B_ball >= 1/3", r.ball.B >= third);
  add("B_ball == 1/3 iff (d,q) == (1,2)", r.ball_equality == (d == 1 && q == 2));
  add("common factor >= q-1", factor >= q - 1);
  add("B_srw - B_sphere == 4q/((q+1)^2(q-1)) * factor",
      r.srw_minus_sphere_B == 4 * q * factor / Rational((q + 1) * (q + 1) * (q - 1)));
  add("B_sphere - B_ball == 2/(q^2-1) * factor", r.sphere_minus_ball_B == 2 * factor / Rational(q * q - 1));
  return r;
}

ChiValues chi_tree(const Rational& alpha, long q) {
  check_alpha(alpha);
  make_geometry(q, 1);
  const Rational ratio_q = ratio(q - 1, q + 1);
  ChiValues chi;
  chi.down_up = 2 * (1 - alpha) * ratio_q * ratio_q;
  chi.down_down = chi.down_up;
  chi.up_up = 2 * (1 - alpha) * ratio_q;
  chi.up_down = chi.up_up;
  return chi;
}

Curvature kappa_curvature(const Rational& alpha, long d, long q, std::size_t n, std::size_t order) {
  const auto geometry = make_geometry(q, d);
  if (n > order) {
    throw Error(ErrorCode::OrderExceeded,
                "n = " + std::to_string(n) + " exceeds series order " + std::to_string(order));
  }
  const auto table = srw_g_table(alpha, q, n);
  Curvature c;
  c.w1 = w1_radial_formula(table.column(n), geometry);
  c.kappa = 1 - c.w1 / d;
  c.kappa_asymptotic = 1 - srw_AB(alpha, d, q).at(static_cast<long>(n)) / d;
  return c;
}

GammaAsymptotic gamma_asymptotic(const Rational& alpha, long q) {
  check_alpha(alpha);
  make_geometry(q, 1);
  GammaAsymptotic out;
  out.alpha = alpha;
  out.q = q;
  const Interval iq(q);
  const Interval sqrt_q = iq.sqrt();
  const Interval qp1(q + 1);
  const Interval qm1_sq(Rational((q - 1) * (q - 1)));
  if (sign(alpha) == 0) {
    out.period = 2;
    out.growth_base = Interval(4 * Rational(q) / Rational((q + 1) * (q + 1)));
    out.leading_constant = Interval(Rational(q * (q + 1))) / (Interval::pi().sqrt() * qm1_sq);
    return out;
  }
  out.period = 1;
  const Interval a(alpha);
  const Interval one_minus_a(Rational(1 - alpha));
  // rho^{-1} = (alpha (q+1) + (1-alpha) 2 sqrt q) / (q+1)
  out.growth_base = (a * qp1 + one_minus_a * Interval(2L) * sqrt_q) / qp1;
  const Interval inner = Interval(Rational(alpha / (1 - alpha))) * qp1 + Interval(2L) * sqrt_q;
  const Interval inner_pow = inner * inner.sqrt();
  const Interval fourth_root_q = sqrt_q.sqrt();
  out.leading_constant = inner_pow * qp1 * fourth_root_q / ((Interval(4L) * Interval::pi()).sqrt() * qm1_sq);
  return out;
}

Interval GammaAsymptotic::leading_term(std::size_t m) const {
  std::size_t steps = m;
  if (period == 2) {
    if (m % 2 == 1) return Interval(0L);
    steps = m / 2;
  }
  if (steps == 0) throw Error(ErrorCode::InvalidParams, "leading term undefined at n = 0");
  const Interval n(static_cast<long>(steps));
  return leading_constant * growth_base.pow(steps) / (n * n.sqrt());
}

}  // namespace treeot
