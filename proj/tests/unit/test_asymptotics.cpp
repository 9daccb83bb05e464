#include <doctest.h>

#include "treeot/asymptotics.hpp"
#include "treeot/error.hpp"
#include "treeot/genfun.hpp"
#include "treeot/lp_oracle.hpp"

using namespace treeot;

TEST_CASE("lazy walk coefficients: small d") {
  for (const auto& alpha : {Rational(0), ratio(1, 3), ratio(4, 5)}) {
    for (long q = 2; q <= 7; ++q) {
      const Rational qp1 = q + 1;
      const auto d1 = srw_AB(alpha, 1, q);
      CHECK(d1.A == 2 * (1 - alpha) * (q - 1) * (q - 1) / (qp1 * qp1));
      CHECK(d1.B == (q * q + 6 * q + 1) / (qp1 * qp1));
      const auto d2 = srw_AB(alpha, 2, q);
      CHECK(d2.A == 2 * (1 - alpha) * (q - 1) * (q - 1) / (q * qp1));
      CHECK(d2.B == 2 * qp1 / q);
      for (long d = 2; d <= 10; d += 2) {
        const auto even = srw_AB(alpha, d, q);
        CHECK(even.A == 2 * (1 - alpha) * (1 - power(q, -d / 2)) * (q - 1) / qp1);
        CHECK(even.B == d * (1 + power(q, -d / 2)));
      }
    }
  }
}

TEST_CASE("B of the lazy walk does not depend on alpha") {
  for (long d = 1; d <= 6; ++d) {
    for (long q = 2; q <= 6; ++q) CHECK(srw_AB(0, d, q).B == srw_AB(ratio(7, 8), d, q).B);
  }
}

TEST_CASE("sphere and ball coefficients") {
  for (long q = 2; q <= 8; ++q) {
    CHECK(sphere_AB(1, q).A == 2 * ratio(q - 1, q + 1));
    CHECK(sphere_AB(1, q).B == 1);
    CHECK(ball_AB(1, q).A == 2 * ratio(q - 1, q + 1));
    CHECK(ball_AB(1, q).B == ratio(q - 1, q + 1));
    CHECK(ball_AB(2, q).B == 2 * ratio(q - 1, q + 1));
  }
  CHECK(sphere_AB(2, 3).A == ratio(4, 3));
  CHECK(sphere_AB(2, 3).B == ratio(5, 3));
  CHECK(sphere_AB(2, 3).exact_for_large_n);
  CHECK_FALSE(ball_AB(2, 3).exact_for_large_n);
  CHECK(ball_AB(1, 2).B == ratio(1, 3));
  CHECK(ball_AB(1, 3).B == ratio(1, 2));
  CHECK(ball_AB(2, 3).B == 1);
  CHECK(ball_AB(4, 2).B == ratio(3, 2));
  CHECK_THROWS_AS(sphere_AB(0, 2), Error);
  CHECK_THROWS_AS(srw_AB(0, 1, 1), Error);
}

TEST_CASE("H values against the series") {
  for (const auto& alpha : {Rational(0), ratio(1, 2)}) {
    for (long q : {2L, 3L}) {
      const auto h = h_values(alpha, q);
      CHECK(h.H_at_1 == ratio(q, q + 1));
      const auto b = srw_closed_form(alpha, q, 64, 1);
      auto g1_gap = [&](long n) {
        return abs_value(b.G1_at_q[n] - (h.H1_at_1 * n + (h.H1_at_1 - h.H1prime_at_1)));
      };
      auto g_gap = [&](long n) { return abs_value(b.G_at_q[n] - h.H_at_1); };
      CHECK(g1_gap(64) < g1_gap(32));
      CHECK(g1_gap(32) < g1_gap(16));
      CHECK(g_gap(64) < g_gap(32));
      CHECK(g1_gap(64) < ratio(1, 10));
    }
  }
  const auto h = h_values(0, 2);
  CHECK(h.H1_at_1 == ratio(1, 9));
  CHECK(h.H1_at_1 - h.H1prime_at_1 == ratio(4, 9));
  CHECK(h_values(ratio(999999, 1000000), 2).H1_at_1 < ratio(1, 100000));
}

TEST_CASE("inequality report") {
  const auto r = verify_inequalities(0, 1, 2);
  CHECK(r.all_pass());
  CHECK(r.ball_equality);
  const auto strict = verify_inequalities(ratio(1, 2), 3, 5);
  CHECK(strict.all_pass());
  CHECK_FALSE(strict.ball_equality);
  CHECK(strict.srw.A < strict.sphere.A);
  CHECK(strict.sphere.A == strict.ball.A);
}

TEST_CASE("large q limits and trivial bounds") {
  const Rational alpha = ratio(1, 4);
  for (long d = 1; d <= 4; ++d) {
    const auto s3 = srw_AB(alpha, d, 1000);
    const auto s6 = srw_AB(alpha, d, 1000000);
    CHECK(abs_value(s6.A - 2 * (1 - alpha)) < abs_value(s3.A - 2 * (1 - alpha)));
    CHECK(abs_value(sphere_AB(d, 1000000).A - 2) < abs_value(sphere_AB(d, 1000).A - 2));
    CHECK(abs_value(ball_AB(d, 1000000).A - 2) < abs_value(ball_AB(d, 1000).A - 2));
    CHECK(abs_value(s6.B - d) < abs_value(s3.B - d));
    CHECK(abs_value(ball_AB(d, 1000000).B - d) < abs_value(ball_AB(d, 1000).B - d));
  }
  for (long d = 1; d <= 3; ++d) {
    const auto table = srw_g_table(0, 2, 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      CHECK(w1_radial_formula(table.column(n), make_geometry(2, d)) <= 2 * static_cast<long>(n) + d);
    }
  }
}

TEST_CASE("sphere B minimum and lazy-walk B infimum") {
  for (long d = 1; d <= 6; ++d) {
    for (long q = 2; q <= 9; ++q) {
      CHECK(sphere_AB(d, q).B >= 1);
      CHECK((sphere_AB(d, q).B == 1) == (d == 1));
      CHECK(srw_AB(0, d, q).B > 1);
    }
  }
  // d = 1: B = (q^2+6q+1)/(q+1)^2 decreases toward 1 along q.
  Rational previous = srw_AB(0, 1, 2).B;
  for (long q = 3; q <= 200; q *= 2) {
    const Rational b = srw_AB(0, 1, q).B;
    CHECK(b < previous);
    CHECK(b > 1);
    previous = b;
  }
  CHECK(previous - 1 < ratio(1, 30));
}

TEST_CASE("chi values") {
  const auto chi = chi_tree(0, 2);
  CHECK(chi.up_up == ratio(2, 3));
  CHECK(chi.up_down == ratio(2, 3));
  CHECK(chi.down_up == ratio(2, 9));
  CHECK(chi.down_down == ratio(2, 9));
  for (const auto& alpha : {Rational(0), ratio(1, 3), ratio(9, 10)}) {
    for (long q = 2; q <= 6; ++q) {
      const auto c = chi_tree(alpha, q);
      CHECK(c.down_up == srw_AB(alpha, 1, q).A);
      CHECK(c.up_up == srw_A_large_d(alpha, q));
      CHECK(srw_AB(alpha, 40, q).A < c.up_up);
      CHECK(c.up_up - srw_AB(alpha, 40, q).A < ratio(1, 100000));
      CHECK(c.down_down <= c.up_down);
    }
  }
  CHECK(chi_tree(ratio(999, 1000), 2).up_up < ratio(1, 100));
}

TEST_CASE("curvature") {
  for (long d = 1; d <= 3; ++d) CHECK(kappa_curvature(ratio(1, 2), d, 3, 0).kappa == 0);

  // alpha = 0, q = 2, d = 1, n = 1 against the LP on a radius-2 truncation.
  const auto c = kappa_curvature(0, 1, 2, 1);
  const auto t = build_truncated_tree(2, 1, 2);
  const auto step = srw_g_table(0, 2, 1).column(1);
  const auto lp = w1_lp(graph_from_tree(t.tree), radial_measure(t, t.x, step), radial_measure(t, t.y, step));
  CHECK(c.w1 == lp.cost);
  CHECK(c.kappa == 1 - lp.cost);
  CHECK(c.kappa == ratio(-2, 3));

  const auto late = kappa_curvature(0, 2, 3, 60);
  CHECK(late.kappa < kappa_curvature(0, 2, 3, 30).kappa);
  CHECK(abs_value(late.kappa - late.kappa_asymptotic) < ratio(1, 1000));
  CHECK_THROWS_AS(kappa_curvature(0, 1, 2, 70), Error);
}

TEST_CASE("gamma asymptotic constants") {
  // alpha = 1/5, q = 3, 5^n scaling: base 1 + 2 sqrt 3, constant sqrt((90 + 37 sqrt 3)/(4 pi)).
  const auto g = gamma_asymptotic(ratio(1, 5), 3);
  const Interval s3 = Interval(3L).sqrt();
  const auto base = g.growth_base * Interval(5L);
  const auto want_base = Interval(1L) + Interval(2L) * s3;
  CHECK(std::abs(base.midpoint() - want_base.midpoint()) < 1e-15);
  CHECK(base.relative_width() < 1e-50);
  const auto want_c = ((Interval(90L) + Interval(37L) * s3) / (Interval(4L) * Interval::pi())).sqrt();
  CHECK(std::abs(g.leading_constant.midpoint() - want_c.midpoint()) < 1e-14);
  CHECK(g.leading_constant.to_string(50).size() >= 50);
  CHECK(g.period == 1);

  // alpha = 1/7, q = 5: base 1 + 2 sqrt 5, constant (3/16) sqrt((230 + 61 sqrt 5)/pi).
  const auto h = gamma_asymptotic(ratio(1, 7), 5);
  const Interval s5 = Interval(5L).sqrt();
  CHECK(std::abs((h.growth_base * Interval(7L)).midpoint() - (Interval(1L) + Interval(2L) * s5).midpoint()) < 1e-14);
  const auto want_h = Interval(ratio(3, 16)) * ((Interval(230L) + Interval(61L) * s5) / Interval::pi()).sqrt();
  CHECK(std::abs(h.leading_constant.midpoint() - want_h.midpoint()) < 1e-14);

  // alpha = 0: period 2, base 4q/(q+1)^2 per even step.
  const auto z = gamma_asymptotic(0, 2);
  CHECK(z.period == 2);
  CHECK(z.growth_base.contains(ratio(8, 9)));
  CHECK(z.leading_term(7).contains(0));
}
