#include <doctest.h>

#include "oracles.hpp"
#include "treeot/error.hpp"
#include "treeot/instance_io.hpp"
#include "treeot/lp_oracle.hpp"
#include "treeot/radial.hpp"

using namespace treeot;

TEST_CASE("all_pairs_distances") {
  const auto d = all_pairs_distances(3, {{0, 1}, {1, 2}});
  CHECK(d[0][2] == 2);
  CHECK(d[2][0] == 2);
  CHECK(d[1][1] == 0);
  CHECK(all_pairs_distances(2, {{0, 1}})[0][1] == 1);
  CHECK_THROWS_AS(all_pairs_distances(3, {{0, 1}}), Error);

  // Radius-2 ball of the 3-regular tree: 1 + 3 + 6 vertices.
  const auto ball = oracle::regular_ball(2, 2);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v < ball.adj.size(); ++v) {
    for (auto w : ball.adj[v]) {
      if (v < w) edges.emplace_back(v, w);
    }
  }
  const auto dist = all_pairs_distances(ball.adj.size(), edges);
  int leaves = 0;
  for (std::size_t v = 0; v < ball.adj.size(); ++v) leaves += dist[0][v] == 2 ? 1 : 0;
  CHECK(leaves == 6);
}

TEST_CASE("w1_lp on small graphs") {
  // A 4-cycle: the LP handles graphs that are not trees.
  const auto g = make_graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const Measure x{{1, 0, 0, 0}};
  const Measure y{{0, 0, 1, 0}};
  CHECK(w1_lp(g, x, y).cost == 2);
  const auto same = w1_lp(g, x, x);
  CHECK(same.cost == 0);
  REQUIRE(same.plan.entries.size() == 1);
  CHECK(same.plan.entries[0].from == same.plan.entries[0].to);
  CHECK_THROWS_AS(w1_lp(g, x, Measure{{0, 0, 2, 0}}), Error);
  CHECK(w1_lp(g, Measure{{0, 0, 0, 0}}, Measure{{0, 0, 0, 0}}).cost == 0);
}

TEST_CASE("eleven-vertex example through the LP") {
  const auto inst = load_instance(TREEOT_FIXTURES "/eleven_vertex.json");
  const auto graph = graph_from_tree(inst.tree);
  const auto lp = w1_lp(graph, inst.mu, inst.nu);
  CHECK(lp.cost == 12);
  CHECK(plan_marginals_hold(lp.plan, inst.mu, inst.nu));

  const auto flow = unique_flow(inst.tree, assignment_from(inst.mu, inst.nu));
  const auto phi = good_potential(inst.tree, flow, inst.tree.index_of("v4"));
  CHECK(dual_feasible(graph, phi));
  const auto report = verify_duality(graph, inst.mu, inst.nu, phi);
  CHECK(report.primal == 12);
  CHECK(report.dual == 12);
  CHECK(report.certificate);
  CHECK(check_complementary_slackness(graph, lp.plan, phi));
}

TEST_CASE("dual feasibility") {
  const auto g = make_graph({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(dual_feasible(g, Potential{{5, 5, 5}}));
  CHECK(dual_feasible(g, Potential{{0, 1, ratio(1, 2)}}));
  CHECK_FALSE(dual_feasible(g, Potential{{0, 2, 2}}));
  CHECK_THROWS_AS(verify_duality(g, Measure{{1, 0, 0}}, Measure{{0, 0, 1}}, Potential{{0, 2, 2}}), Error);
  const auto r = verify_duality(g, Measure{{1, 0, 0}}, Measure{{1, 0, 0}}, Potential{{0, 0, 0}});
  CHECK(r.primal == 0);
  CHECK(r.certificate);
}

TEST_CASE("random trees: LP agrees with the tree flow, weak duality holds") {
  oracle::Rng rng(21);
  for (int k = 0; k < 150; ++k) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 2, 12));
    const auto tree = validate_tree(n, oracle::random_tree_edges(rng, n));
    const auto graph = graph_from_tree(tree);
    const auto mu = oracle::random_measure(rng, n);
    const auto nu = oracle::match_mass(oracle::random_measure(rng, n), mu);
    const auto lp = w1_lp(graph, mu, nu);
    CHECK(lp.cost == w1_tree(tree, mu, nu));
    CHECK(plan_marginals_hold(lp.plan, mu, nu));

    const auto plan = oracle::random_feasible_plan(rng, mu, nu);
    REQUIRE(plan_marginals_hold(plan, mu, nu));
    const auto phi = oracle::random_lipschitz_potential(rng, tree);
    REQUIRE(dual_feasible(graph, phi));
    Rational dual = 0;
    for (std::size_t v = 0; v < n; ++v) dual += (mu.mass[v] - nu.mass[v]) * phi.value[v];
    CHECK(plan_cost(graph, plan) >= dual);
    CHECK(plan_cost(graph, plan) >= lp.cost);
    CHECK(lp.cost >= dual);
  }
}

TEST_CASE("LP size cap") {
  const std::size_t n = 90;
  std::vector<std::pair<std::size_t, std::size_t>> star;
  for (std::size_t v = 1; v < n; ++v) star.emplace_back(0, v);
  const auto g = make_graph(std::vector<std::string>(n, ""), star);
  Measure mu{std::vector<Rational>(n, Rational(0))}, nu = mu;
  for (std::size_t v = 1; v <= 41; ++v) mu.mass[v] = 1;
  for (std::size_t v = 42; v <= 82; ++v) nu.mass[v] = 1;
  try {
    w1_lp(g, mu, nu);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  mu.mass[41] = 0;
  nu.mass[82] = 0;
  mu.mass[1] = 2;
  nu.mass[42] = 2;
  CHECK(w1_lp(g, mu, nu).cost == 2 * 41);
}
