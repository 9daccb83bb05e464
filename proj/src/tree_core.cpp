#include "treeot/tree_core.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "treeot/error.hpp"

namespace treeot {

std::size_t Tree::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "no vertex '" + label + "'");
  return it->second;
}

std::vector<int> Tree::distances_from(std::size_t source) const {
  std::vector<int> dist(size(), -1);
  std::queue<std::size_t> frontier;
  dist.at(source) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    auto v = frontier.front();
    frontier.pop();
    for (const auto& nb : adjacency_[v]) {
      if (dist[nb.vertex] < 0) {
        dist[nb.vertex] = dist[v] + 1;
        frontier.push(nb.vertex);
      }
    }
  }
  return dist;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Tree validate_tree(std::vector<std::string> labels,
                   std::span<const std::pair<std::size_t, std::size_t>> edges) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::NotConnected, "tree has no vertices");

  Tree tree;
  for (std::size_t v = 0; v < n; ++v) {
    if (!tree.index_.emplace(labels[v], v).second) {
      throw Error(ErrorCode::InvalidParams, "duplicate vertex id '" + labels[v] + "'");
    }
  }
  tree.labels_ = std::move(labels);

  std::set<std::pair<std::size_t, std::size_t>> seen;
  DisjointSets components(n);
  tree.adjacency_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    if (a == b) throw Error(ErrorCode::HasCycle, "self-loop at '" + tree.labels_[a] + "'");
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge {" + tree.labels_[key.first] + "," + tree.labels_[key.second] + "} repeated");
    }
    if (!components.unite(a, b)) {
      throw Error(ErrorCode::HasCycle,
                  "edge {" + tree.labels_[a] + "," + tree.labels_[b] + "} closes a cycle");
    }
    const std::size_t e = tree.edges_.size();
    tree.edges_.push_back({key.first, key.second});
    tree.adjacency_[a].push_back({b, e});
    tree.adjacency_[b].push_back({a, e});
  }
  if (tree.edges_.size() + 1 != n) {
    throw Error(ErrorCode::NotConnected, std::to_string(n - tree.edges_.size()) + " components");
  }

  tree.parent_.assign(n, 0);
  tree.parent_edge_.assign(n, 0);
  tree.order_.reserve(n);
  std::vector<char> visited(n, 0);
  visited[0] = 1;
  tree.order_.push_back(0);
  for (std::size_t head = 0; head < tree.order_.size(); ++head) {
    const auto v = tree.order_[head];
    for (const auto& nb : tree.adjacency_[v]) {
      if (visited[nb.vertex]) continue;
      visited[nb.vertex] = 1;
      tree.parent_[nb.vertex] = v;
      tree.parent_edge_[nb.vertex] = nb.edge;
      tree.order_.push_back(nb.vertex);
    }
  }
  return tree;
}

Tree validate_tree(std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<std::string> labels(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) labels[v] = std::to_string(v);
  return validate_tree(std::move(labels), edges);
}

Tree validate_tree(const std::vector<std::string>& vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!index.emplace(vertices[v], v).second) {
      throw Error(ErrorCode::InvalidParams, "duplicate vertex id '" + vertices[v] + "'");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorCode::UnknownVertex, "edge endpoint '" + a + "'");
    if (ib == index.end()) throw Error(ErrorCode::UnknownVertex, "edge endpoint '" + b + "'");
    indexed.emplace_back(ia->second, ib->second);
  }
  return validate_tree(vertices, indexed);
}

Rational Measure::total() const {
  Rational sum = 0;
  for (const auto& m : mass) sum += m;
  return sum;
}

void check_measure(const Measure& measure) {
  for (std::size_t v = 0; v < measure.mass.size(); ++v) {
    if (sign(measure.mass[v]) < 0) {
      throw Error(ErrorCode::NegativeMass, "negative mass at vertex " + std::to_string(v));
    }
  }
}

Measure make_measure(const Tree& tree, const std::map<std::string, Rational>& masses) {
  Measure out{std::vector<Rational>(tree.size(), Rational(0))};
  for (const auto& [label, m] : masses) {
    if (sign(m) < 0) throw Error(ErrorCode::NegativeMass, "negative mass at '" + label + "'");
    out.mass[tree.index_of(label)] = m;
  }
  return out;
}

Assignment assignment_from(const Measure& mu, const Measure& nu) {
  if (mu.size() != nu.size()) throw Error(ErrorCode::InvalidParams, "measures live on different vertex sets");
  check_measure(mu);
  check_measure(nu);
  if (mu.total() != nu.total()) {
    throw Error(ErrorCode::MassMismatch,
                "|mu| = " + to_string(mu.total()) + " but |nu| = " + to_string(nu.total()));
  }
  Assignment rho;
  rho.charge.resize(mu.size());
  for (std::size_t v = 0; v < mu.size(); ++v) rho.charge[v] = mu.mass[v] - nu.mass[v];
  return rho;
}

Flow unique_flow(const Tree& tree, const Assignment& rho) {
  if (rho.charge.size() != tree.size()) throw Error(ErrorCode::InvalidParams, "assignment size != tree size");
  std::vector<Rational> subtree = rho.charge;
  Flow flow{std::vector<Rational>(tree.edge_count(), Rational(0))};
  auto order = tree.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = *it;
    if (v == order.front()) break;
    const auto p = tree.parent(v);
    const auto e = tree.parent_edge(v);
    // psi(v, p) is the charge of v's side of the edge.
    flow.value[e] = tree.edges()[e].lo == v ? subtree[v] : Rational(-subtree[v]);
    subtree[p] += subtree[v];
  }
  if (subtree[order.front()] != 0) {
    throw Error(ErrorCode::NotZeroSum, "charges sum to " + to_string(subtree[order.front()]));
  }
  return flow;
}

Rational flow_out_of(const Tree& tree, const Flow& flow, std::size_t edge, std::size_t from) {
  const auto& e = tree.edges()[edge];
  return e.lo == from ? flow.value[edge] : Rational(-flow.value[edge]);
}

std::vector<Rational> divergence(const Tree& tree, const Flow& flow) {
  std::vector<Rational> div(tree.size(), Rational(0));
  for (std::size_t e = 0; e < tree.edge_count(); ++e) {
    const auto& edge = tree.edges()[e];
    div[edge.lo] += flow.value[e];
    div[edge.hi] -= flow.value[e];
  }
  return div;
}

Rational flow_cost(const Flow& flow) {
  Rational cost = 0;
  for (const auto& f : flow.value) cost += abs_value(f);
  return cost;
}

Potential good_potential(const Tree& tree, const Flow& flow, std::size_t root) {
  if (root >= tree.size()) throw Error(ErrorCode::UnknownVertex, "root out of range");
  Potential phi{std::vector<Rational>(tree.size(), Rational(0))};
  std::vector<char> visited(tree.size(), 0);
  std::vector<std::size_t> stack{root};
  visited[root] = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (const auto& nb : tree.neighbors(x)) {
      if (visited[nb.vertex]) continue;
      visited[nb.vertex] = 1;
      // Phi(x) - Phi(y) = sign psi(x, y)
      phi.value[nb.vertex] = phi.value[x] - sign(flow_out_of(tree, flow, nb.edge, x));
      stack.push_back(nb.vertex);
    }
  }
  return phi;
}

bool is_good_potential(const Tree& tree, const Flow& flow, const Potential& phi) {
  if (phi.value.size() != tree.size()) return false;
  for (std::size_t e = 0; e < tree.edge_count(); ++e) {
    const auto& edge = tree.edges()[e];
    const Rational drop = phi.value[edge.lo] - phi.value[edge.hi];
    const int s = sign(flow.value[e]);
    if (s != 0 && drop != s) return false;
    if (s == 0 && abs_value(drop) > 1) return false;
  }
  return true;
}

Rational potential_value(const Assignment& rho, const Potential& phi) {
  if (rho.charge.size() != phi.value.size()) throw Error(ErrorCode::InvalidParams, "size mismatch");
  Rational sum = 0;
  for (std::size_t v = 0; v < rho.charge.size(); ++v) {
    if (rho.charge[v] != 0) sum += rho.charge[v] * phi.value[v];
  }
  return sum;
}

Rational w1_tree(const Tree& tree, const Measure& mu, const Measure& nu) {
  if (mu.size() != tree.size()) throw Error(ErrorCode::InvalidParams, "measure size != tree size");
  return flow_cost(unique_flow(tree, assignment_from(mu, nu)));
}

}  // namespace treeot
