#pragma once

// Exact W1 on finite trees. The admissible flow for a zero-sum assignment
// is unique on a tree, so W1 is the total absolute flow; a good potential
// read off the flow directions certifies the same value from the dual side.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treeot/rational.hpp"

namespace treeot {

/// Undirected edge stored with lo < hi. Flow values are reported in the
/// lo -> hi orientation; the sign carries the direction.
struct Edge {
  std::size_t lo;
  std::size_t hi;
};

struct Neighbor {
  std::size_t vertex;
  std::size_t edge;
};

class Tree {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  /// Dense index of a vertex id; throws Error(UnknownVertex).
  std::size_t index_of(const std::string& label) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(std::size_t v) const { return adjacency_.at(v); }

  /// Breadth-first order from vertex 0 with parent links; parent of 0 is itself.
  std::span<const std::size_t> bfs_order() const noexcept { return order_; }
  std::size_t parent(std::size_t v) const { return parent_.at(v); }
  std::size_t parent_edge(std::size_t v) const { return parent_edge_.at(v); }

  /// Hop distances from `source` to every vertex.
  std::vector<int> distances_from(std::size_t source) const;

 private:
  friend Tree validate_tree(std::vector<std::string> labels,
                            std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_edge_;
};

/// Validates an id-based vertex/edge list. Errors: DuplicateEdge,
/// HasCycle (including self-loops), NotConnected, UnknownVertex.
Tree validate_tree(const std::vector<std::string>& vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges);

/// Index-based variant; `labels` gives the vertex ids (must be distinct).
Tree validate_tree(std::vector<std::string> labels,
                   std::span<const std::pair<std::size_t, std::size_t>> edges);

/// Index-based variant with labels "0".."n-1".
Tree validate_tree(std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> edges);

/// Nonnegative masses, dense over the vertices of a graph.
struct Measure {
  std::vector<Rational> mass;

  Rational total() const;
  std::size_t size() const noexcept { return mass.size(); }
};

/// Builds a dense measure from id -> mass pairs. Errors: UnknownVertex, NegativeMass.
Measure make_measure(const Tree& tree, const std::map<std::string, Rational>& masses);
/// Throws NegativeMass when any entry is negative.
void check_measure(const Measure& measure);

/// Signed charges with zero total.
struct Assignment {
  std::vector<Rational> charge;
};

/// One value per edge, psi(lo, hi).
struct Flow {
  std::vector<Rational> value;
};

struct Potential {
  std::vector<Rational> value;
};

/// rho = mu - nu. Errors: MassMismatch when |mu| != |nu|.
Assignment assignment_from(const Measure& mu, const Measure& nu);

/// The unique flow with div psi = rho, one post-order pass of subtree sums.
/// Errors: NotZeroSum, InvalidParams (size mismatch).
Flow unique_flow(const Tree& tree, const Assignment& rho);

/// psi(from, other endpoint of edge e).
Rational flow_out_of(const Tree& tree, const Flow& flow, std::size_t edge, std::size_t from);

/// div psi(v) = sum over neighbors w of psi(v, w).
std::vector<Rational> divergence(const Tree& tree, const Flow& flow);

/// Sum of |psi(e)| over edges.
Rational flow_cost(const Flow& flow);

/// Potential with Phi(root) = 0 and Phi(x) - Phi(y) = sign(psi(x, y)) on every
/// edge (zero-flow edges keep the potential constant).
Potential good_potential(const Tree& tree, const Flow& flow, std::size_t root = 0);

/// Definition check: +-1 drop along nonzero flow, 1-Lipschitz across zero flow.
bool is_good_potential(const Tree& tree, const Flow& flow, const Potential& phi);

/// rho^T Phi.
Rational potential_value(const Assignment& rho, const Potential& phi);

/// Exact W1(mu, nu) = flow_cost(unique_flow(mu - nu)).
Rational w1_tree(const Tree& tree, const Measure& mu, const Measure& nu);

}  // namespace treeot
