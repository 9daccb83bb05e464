#include <doctest.h>

#include "oracles.hpp"
#include "treeot/error.hpp"
#include "treeot/genfun.hpp"

using namespace treeot;

TEST_CASE("lazy walk table against explicit propagation") {
  for (long q : {2L, 3L}) {
    for (const auto& alpha : {Rational(0), ratio(1, 3), ratio(3, 4)}) {
      const auto table = srw_g_table(alpha, q, 7);
      for (int n = 0; n <= 7; ++n) {
        const auto g = oracle::lazy_walk_density(q, alpha, n);
        REQUIRE(g.size() == static_cast<std::size_t>(n + 1));
        for (int l = 0; l <= n; ++l) CHECK(table.at(l, n) == g[static_cast<std::size_t>(l)]);
        CHECK(table.at(n + 1, n) == 0);
        CHECK(table.column_mass(static_cast<std::size_t>(n)) == 1);
      }
    }
  }
  const auto t = srw_g_table(0, 2, 4);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 0) == 0);
  CHECK(t.at(0, 2) == ratio(1, 3));
}

TEST_CASE("alpha range") {
  try {
    srw_g_table(1, 2, 3);
    FAIL("expected InvalidAlpha");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidAlpha);
  }
  CHECK_THROWS_AS(srw_closed_form(-1, 2, 3), Error);
}

TEST_CASE("closed form equals the recurrence") {
  for (const auto& alpha : {Rational(0), ratio(1, 5), ratio(1, 2), ratio(9, 10)}) {
    for (long q : {2L, 3L, 5L}) {
      const auto table = srw_g_table(alpha, q, 30);
      const auto closed = srw_closed_form(alpha, q, 30, 5);
      const auto direct = bundle_from_table(table, 5);
      CHECK(closed.gammas[0][0] == 1);
      CHECK(closed.G_at_q == direct.G_at_q);
      CHECK(closed.G1_at_q == direct.G1_at_q);
      CHECK(closed.gammas == direct.gammas);
      CHECK(check_functional_equation(table, alpha));
      CHECK(check_functional_equation(closed, alpha));
    }
  }
}

TEST_CASE("functional equation detects a perturbed table") {
  auto table = srw_g_table(ratio(1, 2), 2, 12);
  CHECK(check_functional_equation(table, ratio(1, 2)));
  table.set(3, 7, table.at(3, 7) + ratio(1, 1000));
  CHECK_FALSE(check_functional_equation(table, ratio(1, 2)));

  auto bundle = srw_closed_form(0, 3, 12);
  CHECK(check_functional_equation(bundle, 0));
  bundle.G1_at_q[5] += 1;
  CHECK_FALSE(check_functional_equation(bundle, 0));
  CHECK_FALSE(check_functional_equation(srw_closed_form(0, 3, 12), ratio(1, 3)));
}

TEST_CASE("sphere and ball generating functions") {
  const auto sphere = sphere_gf(2, 12);
  CHECK(sphere.G_at_q[0] == 1);
  CHECK(sphere.G_at_q[4] == ratio(2, 3));
  CHECK(sphere.G1_at_q[5] == ratio(5, 3));
  CHECK(sphere_g_table(2, 3).at(3, 3) == ratio(1, 12));
  CHECK(sphere_g_table(2, 3).column_mass(3) == 1);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t n = 0; n <= 12; ++n) CHECK((sphere.gammas[i][n] != 0) == (n == i));
  }

  const auto ball_table = ball_g_table(2, 6);
  CHECK(ball_table.at(0, 0) == 1);
  for (int l = 0; l <= 2; ++l) CHECK(ball_table.at(l, 2) == ratio(1, 10));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(ball_table.column_mass(n) == 1);

  for (long q : {2L, 3L, 4L}) {
    const auto from_table = bundle_from_table(sphere_g_table(q, 15), 4);
    const auto direct = sphere_gf(q, 15, 4);
    CHECK(from_table.G_at_q == direct.G_at_q);
    CHECK(from_table.G1_at_q == direct.G1_at_q);
    CHECK(from_table.gammas == direct.gammas);
    const auto ball_direct = ball_gf(q, 15, 4);
    const auto ball_from_table = bundle_from_table(ball_g_table(q, 15), 4);
    CHECK(ball_direct.G_at_q == ball_from_table.G_at_q);
    CHECK(ball_direct.G1_at_q == ball_from_table.G1_at_q);
    CHECK(ball_direct.gammas == ball_from_table.gammas);
  }

  // [y^n] G1 for balls approaches n/(q+1) - 1/(q^2-1).
  const auto ball = ball_gf(3, 40);
  auto gap = [&](long n) { return abs_value(ball.G1_at_q[n] - (ratio(n, 4) - ratio(1, 8))); };
  CHECK(gap(40) < gap(20));
  CHECK(gap(40) < ratio(1, 1000000));
}

TEST_CASE("generating-function distance matches the potential sums") {
  oracle::Rng rng(41);
  for (int k = 0; k < 40; ++k) {
    const long q = oracle::uniform(rng, 2, 5);
    const long d = oracle::uniform(rng, 1, 6);
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 0, 14));
    const auto g = make_geometry(q, d);
    const Rational alpha = ratio(oracle::uniform(rng, 0, 8), 9);
    for (const auto& table : {srw_g_table(alpha, q, 14), sphere_g_table(q, 14), ball_g_table(q, 14)}) {
      CHECK(w1_via_genfun(bundle_from_table(table), g, n) == w1_radial_formula(table.column(n), g));
    }
    CHECK(w1_via_genfun(srw_closed_form(alpha, q, 14), g, n) ==
          w1_radial_formula(srw_g_table(alpha, q, 14).column(n), g));
  }

  // d = 1 collapses to (2q-2) G1 + ((q+1)/q) G - (1/q) gamma_0.
  const auto b = srw_closed_form(ratio(1, 4), 3, 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    const Rational reduced = 4 * b.G1_at_q[n] + ratio(4, 3) * b.G_at_q[n] - ratio(1, 3) * b.gammas[0][n];
    CHECK(w1_via_genfun(b, make_geometry(3, 1), n) == reduced);
  }

  // Sphere, q = 3, d = 2, n = 4: 2 (q-1)/q n + 2 (q^2+1)/(q(q+1)).
  CHECK(w1_via_genfun(sphere_gf(3, 8), make_geometry(3, 2), 4) == ratio(16, 3) + ratio(5, 3));

  // Lazy walk alpha = 1/3, q = 2, d = 3, n = 6 on an explicit truncation.
  const auto walk = srw_g_table(ratio(1, 3), 2, 6);
  CHECK(w1_via_genfun(bundle_from_table(walk), make_geometry(2, 3), 6) ==
        w1_radial_tree(walk.column(6), make_geometry(2, 3)));

  CHECK_THROWS_AS(w1_via_genfun(sphere_gf(3, 8), make_geometry(3, 2), 9), Error);
  CHECK_THROWS_AS(w1_via_genfun(sphere_gf(3, 8, 1), make_geometry(3, 4), 2), Error);
}

TEST_CASE("gamma_i smallness") {
  const auto b = srw_closed_form(ratio(1, 5), 2, 60, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(b.gammas[i][60] < b.gammas[i][40]);
    CHECK(b.gammas[i][40] < b.gammas[i][20]);
  }
}
