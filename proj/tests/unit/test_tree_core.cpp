#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "treeot/error.hpp"
#include "treeot/instance_io.hpp"
#include "treeot/tree_core.hpp"

using namespace treeot;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

Instance eleven_vertex() { return load_instance(TREEOT_FIXTURES "/eleven_vertex.json"); }

Rational edge_flow(const Instance& inst, const Flow& flow, const std::string& from, const std::string& to) {
  const auto a = inst.tree.index_of(from);
  const auto b = inst.tree.index_of(to);
  for (const auto& nb : inst.tree.neighbors(a)) {
    if (nb.vertex == b) return flow_out_of(inst.tree, flow, nb.edge, a);
  }
  FAIL("no such edge");
  return 0;
}

}  // namespace

TEST_CASE("validate_tree") {
  CHECK(validate_tree({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}).size() == 3);
  CHECK(code_of([] { validate_tree({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }) == ErrorCode::HasCycle);
  CHECK(code_of([] { validate_tree({"a", "b", "c"}, {{"a", "b"}}); }) == ErrorCode::NotConnected);
  CHECK(code_of([] { validate_tree({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { validate_tree({"a", "b"}, {{"a", "a"}}); }) == ErrorCode::HasCycle);
  CHECK(code_of([] { validate_tree({"a", "b"}, {{"a", "z"}}); }) == ErrorCode::UnknownVertex);

  const auto t = validate_tree({"x", "y"}, {{"y", "x"}});
  CHECK(t.edges()[0].lo == 0);
  CHECK(t.edges()[0].hi == 1);
}

TEST_CASE("assignment_from") {
  const Measure mu{{1, 0, 2}};
  const Measure nu{{0, 3, 0}};
  CHECK(assignment_from(mu, nu).charge == std::vector<Rational>{1, -3, 2});
  CHECK(code_of([&] { assignment_from(mu, Measure{{0, 1, 0}}); }) == ErrorCode::MassMismatch);
  CHECK(code_of([&] { assignment_from(Measure{{-1, 1, 0}}, Measure{{0, 0, 0}}); }) == ErrorCode::NegativeMass);
  CHECK(assignment_from(mu, mu).charge == std::vector<Rational>(3, Rational(0)));
}

TEST_CASE("eleven-vertex example: flow, potential and distance") {
  const auto inst = eleven_vertex();
  const auto rho = assignment_from(inst.mu, inst.nu);
  const std::map<std::string, long> charges{{"v1", 1},  {"v2", 0},  {"v3", 0}, {"v4", -1}, {"v5", 1}, {"v6", -2},
                                            {"v7", -2}, {"v8", 0},  {"v9", 1}, {"v10", 1}, {"v11", 1}};
  for (const auto& [label, c] : charges) CHECK(rho.charge[inst.tree.index_of(label)] == c);

  const auto flow = unique_flow(inst.tree, rho);
  CHECK(divergence(inst.tree, flow) == rho.charge);
  CHECK(edge_flow(inst, flow, "v1", "v3") == 1);
  CHECK(edge_flow(inst, flow, "v3", "v6") == 1);
  CHECK(edge_flow(inst, flow, "v5", "v6") == 1);
  CHECK(edge_flow(inst, flow, "v7", "v4") == 1);
  CHECK(edge_flow(inst, flow, "v8", "v7") == 3);
  CHECK(edge_flow(inst, flow, "v9", "v8") == 3);
  CHECK(edge_flow(inst, flow, "v10", "v9") == 1);
  CHECK(edge_flow(inst, flow, "v11", "v9") == 1);
  CHECK(edge_flow(inst, flow, "v2", "v3") == 0);
  CHECK(edge_flow(inst, flow, "v6", "v8") == 0);
  CHECK(flow_cost(flow) == 12);

  const auto phi = good_potential(inst.tree, flow, inst.tree.index_of("v4"));
  const std::map<std::string, long> drawn{{"v1", 4}, {"v2", 3}, {"v3", 3}, {"v4", 0},  {"v5", 3}, {"v6", 2},
                                          {"v7", 1}, {"v8", 2}, {"v9", 3}, {"v10", 4}, {"v11", 4}};
  for (const auto& [label, value] : drawn) CHECK(phi.value[inst.tree.index_of(label)] == value);
  CHECK(is_good_potential(inst.tree, flow, phi));
  CHECK(potential_value(rho, phi) == 12);
  CHECK(w1_tree(inst.tree, inst.mu, inst.nu) == 12);
}

TEST_CASE("trivial instances") {
  const std::vector<std::pair<std::size_t, std::size_t>> path{{0, 1}, {1, 2}, {2, 3}};
  const auto t = validate_tree(4, path);
  const Measure x{{1, 0, 0, 0}};
  const Measure y{{0, 0, 0, 1}};
  CHECK(w1_tree(t, x, y) == 3);
  CHECK(w1_tree(t, x, x) == 0);
  const Measure zero{{0, 0, 0, 0}};
  CHECK(w1_tree(t, zero, zero) == 0);
  const auto flow = unique_flow(t, assignment_from(zero, zero));
  CHECK(flow_cost(flow) == 0);
  CHECK(good_potential(t, flow).value == std::vector<Rational>(4, Rational(0)));
  CHECK(code_of([&] { unique_flow(t, Assignment{{1, 0, 0, 0}}); }) == ErrorCode::NotZeroSum);
}

TEST_CASE("random trees: divergence, good potential, gauge") {
  oracle::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 2, 14));
    const auto tree = validate_tree(n, oracle::random_tree_edges(rng, n));
    const auto mu = oracle::random_measure(rng, n);
    const auto nu = oracle::match_mass(oracle::random_measure(rng, n), mu);
    const auto rho = assignment_from(mu, nu);
    const auto flow = unique_flow(tree, rho);
    CHECK(divergence(tree, flow) == rho.charge);
    const auto cost = flow_cost(flow);
    for (std::size_t root = 0; root < n; root += 3) {
      const auto phi = good_potential(tree, flow, root);
      CHECK(phi.value[root] == 0);
      CHECK(is_good_potential(tree, flow, phi));
      CHECK(potential_value(rho, phi) == cost);
    }
  }
}

TEST_CASE("metric properties of w1_tree") {
  oracle::Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 2, 10));
    const auto tree = validate_tree(n, oracle::random_tree_edges(rng, n));
    const auto a = oracle::random_measure(rng, n);
    const auto b = oracle::match_mass(oracle::random_measure(rng, n), a);
    const auto c = oracle::match_mass(oracle::random_measure(rng, n), a);
    const auto ab = w1_tree(tree, a, b);
    CHECK(ab == w1_tree(tree, b, a));
    CHECK(w1_tree(tree, a, c) <= ab + w1_tree(tree, b, c));
    CHECK((ab == 0) == (a.mass == b.mass));
    CHECK(w1_tree(tree, a, a) == 0);

    const Rational s = ratio(oracle::uniform(rng, 1, 9), oracle::uniform(rng, 1, 9));
    Measure sa = a, sb = b;
    for (auto& x : sa.mass) x *= s;
    for (auto& x : sb.mass) x *= s;
    CHECK(w1_tree(tree, sa, sb) == s * ab);
  }
}

TEST_CASE("instance parsing errors carry locations") {
  try {
    parse_instance("{\n  \"vertices\": [\"a\",\n  \"edges\": []\n}", "broken.json");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(code_of([] { parse_instance(R"({"vertices":["a"],"edges":[],"mu":{"b":"1"},"nu":{}})"); }) ==
        ErrorCode::UnknownVertex);
  CHECK(code_of([] { parse_instance(R"({"vertices":["a"],"edges":[],"mu":{"a":"x"},"nu":{}})"); }) ==
        ErrorCode::ParseError);

  const auto inst = eleven_vertex();
  const auto again = parse_instance(write_instance(inst.tree, inst.mu, inst.nu));
  CHECK(again.tree.labels() == inst.tree.labels());
  CHECK(again.mu.mass == inst.mu.mass);
  CHECK(again.nu.mass == inst.nu.mass);
}
