#pragma once

// Exact Kantorovich LP for small graphs: an independent check on the tree
// computations. The primal is solved with the transportation simplex over
// rationals; the dual side only needs a potential and the distance matrix.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "treeot/rational.hpp"
#include "treeot/tree_core.hpp"

namespace treeot {

/// Largest |supp mu| * |supp nu| accepted by w1_lp.
inline constexpr std::size_t kMaxLpCells = 1600;

struct FiniteGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Hop distances; dist[u][v].
  std::vector<std::vector<int>> dist;

  std::size_t size() const noexcept { return labels.size(); }
};

/// BFS from every vertex. Errors: NotConnected, UnknownVertex.
std::vector<std::vector<int>> all_pairs_distances(std::size_t vertex_count,
                                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges);

FiniteGraph make_graph(std::vector<std::string> labels, std::vector<std::pair<std::size_t, std::size_t>> edges);
FiniteGraph graph_from_tree(const Tree& tree);

struct TransportEntry {
  std::size_t from;
  std::size_t to;
  Rational mass;
};

/// Sparse plan; only positive entries are stored.
struct TransportPlan {
  std::vector<TransportEntry> entries;
};

struct LpSolution {
  Rational cost;
  TransportPlan plan;
  std::size_t pivots = 0;
};

/// Exact optimum of the Kantorovich problem and an optimal plan.
/// Errors: MassMismatch, NegativeMass, TooLarge, InvalidParams.
LpSolution w1_lp(const FiniteGraph& graph, const Measure& mu, const Measure& nu);

/// Sum of dist(from, to) * mass.
Rational plan_cost(const FiniteGraph& graph, const TransportPlan& plan);

/// Row sums equal mu and column sums equal nu, exactly.
bool plan_marginals_hold(const TransportPlan& plan, const Measure& mu, const Measure& nu);

/// |Phi(u) - Phi(v)| <= 1 on every edge.
bool dual_feasible(const FiniteGraph& graph, const Potential& phi);

struct DualityReport {
  Rational primal;
  Rational dual;
  bool certificate = false;
};

/// Errors: InfeasiblePotential when phi is not 1-Lipschitz.
DualityReport verify_duality(const FiniteGraph& graph, const Measure& mu, const Measure& nu, const Potential& phi);

/// Every positive plan entry (v, w) has Phi(v) - Phi(w) = dist(v, w).
bool check_complementary_slackness(const FiniteGraph& graph, const TransportPlan& plan, const Potential& phi);

}  // namespace treeot
