#include "treeot/lp_oracle.hpp"

#include <limits>
#include <optional>
#include <queue>

#include "treeot/error.hpp"

namespace treeot {

std::vector<std::vector<int>> all_pairs_distances(std::size_t vertex_count,
                                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adjacency(vertex_count);
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  std::vector<std::vector<int>> dist(vertex_count, std::vector<int>(vertex_count, -1));
  for (std::size_t s = 0; s < vertex_count; ++s) {
    auto& row = dist[s];
    std::queue<std::size_t> frontier;
    row[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      auto v = frontier.front();
      frontier.pop();
      for (auto w : adjacency[v]) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          frontier.push(w);
        }
      }
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
      if (row[v] < 0) throw Error(ErrorCode::NotConnected, "graph is not connected");
    }
  }
  return dist;
}

FiniteGraph make_graph(std::vector<std::string> labels, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  FiniteGraph g;
  g.dist = all_pairs_distances(labels.size(), edges);
  g.labels = std::move(labels);
  g.edges = std::move(edges);
  return g;
}

FiniteGraph graph_from_tree(const Tree& tree) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(tree.edge_count());
  for (const auto& e : tree.edges()) edges.emplace_back(e.lo, e.hi);
  return make_graph(tree.labels(), std::move(edges));
}

namespace {

// Transportation simplex on the m x k table of support points. The basis is
// a spanning tree of the bipartite graph rows + columns, stored as a flag
// per cell; degenerate (zero) basic cells are kept explicitly.
class TransportationSimplex {
 public:
  TransportationSimplex(std::vector<Rational> supply, std::vector<Rational> demand, std::vector<int> cost)
      : m_(supply.size()), k_(demand.size()), cost_(std::move(cost)), flow_(m_ * k_), basic_(m_ * k_, 0) {
    northwest_corner(std::move(supply), std::move(demand));
  }

  std::size_t solve() {
    std::size_t pivots = 0;
    while (true) {
      compute_potentials();
      std::optional<std::size_t> entering;
      for (std::size_t cell = 0; cell < m_ * k_; ++cell) {
        if (basic_[cell]) continue;
        if (cost_[cell] - u_[cell / k_] - v_[cell % k_] < 0) {
          entering = cell;
          break;
        }
      }
      if (!entering) return pivots;
      pivot(*entering);
      ++pivots;
    }
  }

  const Rational& flow(std::size_t cell) const { return flow_[cell]; }

 private:
  void northwest_corner(std::vector<Rational> s, std::vector<Rational> t) {
    std::size_t i = 0, j = 0;
    while (i < m_ && j < k_) {
      const std::size_t cell = i * k_ + j;
      const Rational amount = s[i] < t[j] ? s[i] : t[j];
      flow_[cell] = amount;
      basic_[cell] = 1;
      s[i] -= amount;
      t[j] -= amount;
      if (i == m_ - 1) {
        ++j;
      } else if (j == k_ - 1) {
        ++i;
      } else if (s[i] == 0) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  // Node ids: rows 0..m-1, columns m..m+k-1.
  std::vector<std::vector<std::size_t>> basis_adjacency() const {
    std::vector<std::vector<std::size_t>> adj(m_ + k_);
    for (std::size_t cell = 0; cell < m_ * k_; ++cell) {
      if (!basic_[cell]) continue;
      adj[cell / k_].push_back(m_ + cell % k_);
      adj[m_ + cell % k_].push_back(cell / k_);
    }
    return adj;
  }

  void compute_potentials() {
    const auto adj = basis_adjacency();
    constexpr long kUnset = std::numeric_limits<long>::min();
    std::vector<long> pot(m_ + k_, kUnset);
    std::queue<std::size_t> frontier;
    pot[0] = 0;
    frontier.push(0);
    while (!frontier.empty()) {
      auto node = frontier.front();
      frontier.pop();
      for (auto other : adj[node]) {
        if (pot[other] != kUnset) continue;
        const std::size_t cell = node < m_ ? node * k_ + (other - m_) : other * k_ + (node - m_);
        pot[other] = cost_[cell] - pot[node];
        frontier.push(other);
      }
    }
    u_.assign(pot.begin(), pot.begin() + static_cast<long>(m_));
    v_.assign(pot.begin() + static_cast<long>(m_), pot.end());
  }

  void pivot(std::size_t entering) {
    const std::size_t r = entering / k_;
    const std::size_t c = m_ + entering % k_;
    const auto adj = basis_adjacency();

    // Path from row r to column c in the basis tree.
    std::vector<std::size_t> parent(m_ + k_, m_ + k_);
    std::queue<std::size_t> frontier;
    parent[r] = r;
    frontier.push(r);
    while (!frontier.empty() && parent[c] == m_ + k_) {
      auto node = frontier.front();
      frontier.pop();
      for (auto other : adj[node]) {
        if (parent[other] != m_ + k_) continue;
        parent[other] = node;
        frontier.push(other);
      }
    }
    std::vector<std::size_t> path{c};
    while (path.back() != r) path.push_back(parent[path.back()]);

    // Cells along path c -> ... -> r; walking from r, signs alternate - + - ...
    std::vector<std::size_t> cells;
    for (std::size_t idx = 0; idx + 1 < path.size(); ++idx) {
      const auto a = path[idx];
      const auto b = path[idx + 1];
      cells.push_back(a < m_ ? a * k_ + (b - m_) : b * k_ + (a - m_));
    }
    std::vector<std::size_t> minus, plus;
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
      const std::size_t from_r = cells.size() - 1 - idx;
      (from_r % 2 == 0 ? minus : plus).push_back(cells[idx]);
    }

    std::size_t leaving = minus.front();
    for (auto cell : minus) {
      if (flow_[cell] < flow_[leaving] || (flow_[cell] == flow_[leaving] && cell < leaving)) leaving = cell;
    }
    const Rational theta = flow_[leaving];
    for (auto cell : minus) flow_[cell] -= theta;
    for (auto cell : plus) flow_[cell] += theta;
    flow_[entering] = theta;
    basic_[entering] = 1;
    basic_[leaving] = 0;
  }

  std::size_t m_;
  std::size_t k_;
  std::vector<int> cost_;
  std::vector<Rational> flow_;
  std::vector<char> basic_;
  std::vector<long> u_;
  std::vector<long> v_;
};

}  // namespace

LpSolution w1_lp(const FiniteGraph& graph, const Measure& mu, const Measure& nu) {
  if (mu.size() != graph.size() || nu.size() != graph.size()) {
    throw Error(ErrorCode::InvalidParams, "measure size != graph size");
  }
  check_measure(mu);
  check_measure(nu);
  if (mu.total() != nu.total()) {
    throw Error(ErrorCode::MassMismatch,
                "|mu| = " + to_string(mu.total()) + " but |nu| = " + to_string(nu.total()));
  }

  std::vector<std::size_t> rows, cols;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (sign(mu.mass[v]) > 0) rows.push_back(v);
    if (sign(nu.mass[v]) > 0) cols.push_back(v);
  }
  LpSolution out;
  if (rows.empty()) return out;
  if (rows.size() * cols.size() > kMaxLpCells) {
    throw Error(ErrorCode::TooLarge, std::to_string(rows.size()) + " x " + std::to_string(cols.size()) +
                                         " transport table exceeds " + std::to_string(kMaxLpCells) + " cells");
  }

  std::vector<Rational> supply, demand;
  for (auto v : rows) supply.push_back(mu.mass[v]);
  for (auto v : cols) demand.push_back(nu.mass[v]);
  std::vector<int> cost(rows.size() * cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) cost[i * cols.size() + j] = graph.dist[rows[i]][cols[j]];
  }

  TransportationSimplex simplex(std::move(supply), std::move(demand), std::move(cost));
  out.pivots = simplex.solve();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto& f = simplex.flow(i * cols.size() + j);
      if (sign(f) > 0) out.plan.entries.push_back({rows[i], cols[j], f});
    }
  }
  out.cost = plan_cost(graph, out.plan);
  return out;
}

Rational plan_cost(const FiniteGraph& graph, const TransportPlan& plan) {
  Rational cost = 0;
  for (const auto& e : plan.entries) cost += e.mass * graph.dist[e.from][e.to];
  return cost;
}

bool plan_marginals_hold(const TransportPlan& plan, const Measure& mu, const Measure& nu) {
  std::vector<Rational> row(mu.size(), Rational(0)), col(nu.size(), Rational(0));
  for (const auto& e : plan.entries) {
    if (sign(e.mass) < 0 || e.from >= row.size() || e.to >= col.size()) return false;
    row[e.from] += e.mass;
    col[e.to] += e.mass;
  }
  return row == mu.mass && col == nu.mass;
}

bool dual_feasible(const FiniteGraph& graph, const Potential& phi) {
  if (phi.value.size() != graph.size()) return false;
  for (auto [a, b] : graph.edges) {
    if (abs_value(phi.value[a] - phi.value[b]) > 1) return false;
  }
  return true;
}

DualityReport verify_duality(const FiniteGraph& graph, const Measure& mu, const Measure& nu, const Potential& phi) {
  if (!dual_feasible(graph, phi)) throw Error(ErrorCode::InfeasiblePotential, "potential is not 1-Lipschitz");
  DualityReport report;
  report.primal = w1_lp(graph, mu, nu).cost;
  for (std::size_t v = 0; v < graph.size(); ++v) report.dual += (mu.mass[v] - nu.mass[v]) * phi.value[v];
  report.certificate = report.primal == report.dual;
  return report;
}

bool check_complementary_slackness(const FiniteGraph& graph, const TransportPlan& plan, const Potential& phi) {
  for (const auto& e : plan.entries) {
    if (sign(e.mass) <= 0) continue;
    if (phi.value[e.from] - phi.value[e.to] != graph.dist[e.from][e.to]) return false;
  }
  return true;
}

}  // namespace treeot
