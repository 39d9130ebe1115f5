#include "signedteams/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace signedteams::oracle {
namespace {

void check_nodes(const SignedGraph& graph, const Budget& budget) {
  if (graph.node_count() > budget.max_nodes) {
    throw BudgetExceeded("graph exceeds the oracle node budget");
  }
}

int edge_value(const SignedGraph& graph, NodeId a, NodeId b) {
  for (const Neighbor& nb : graph.neighbors(a)) {
    if (nb.node == b) return nb.sign == Sign::Positive ? 1 : -1;
  }
  return 0;
}

// Depth-limited DFS over simple paths; calls visit(path) for every path
// (including the single-node one).
void walk(const SignedGraph& graph, NodeList& path, std::vector<char>& used, std::uint32_t max_len,
          const std::function<void(const NodeList&)>& visit) {
  visit(path);
  if (path.size() - 1 == max_len) return;
  for (const Neighbor& nb : graph.neighbors(path.back())) {
    if (used[nb.node]) continue;
    used[nb.node] = 1;
    path.push_back(nb.node);
    walk(graph, path, used, max_len, visit);
    path.pop_back();
    used[nb.node] = 0;
  }
}

}  // namespace

std::vector<NodeList> enumerate_simple_paths(const SignedGraph& graph, NodeId u,
                                             std::uint32_t max_len, const Budget& budget) {
  check_nodes(graph, budget);
  if (max_len > budget.max_path_len) throw BudgetExceeded("path length exceeds the oracle budget");
  std::vector<NodeList> out;
  NodeList path{u};
  std::vector<char> used(graph.node_count(), 0);
  used[u] = 1;
  walk(graph, path, used, max_len, [&](const NodeList& p) { out.push_back(p); });
  return out;
}

std::vector<NodeList> enumerate_shortest_paths(const SignedGraph& graph, NodeId u, NodeId v,
                                               const Budget& budget) {
  check_nodes(graph, budget);
  const std::uint32_t limit = std::min<std::uint32_t>(
      budget.max_path_len, graph.node_count() == 0 ? 0 : static_cast<std::uint32_t>(graph.node_count() - 1));
  for (std::uint32_t len = 0; len <= limit; ++len) {
    std::vector<NodeList> found;
    NodeList path{u};
    std::vector<char> used(graph.node_count(), 0);
    used[u] = 1;
    walk(graph, path, used, len, [&](const NodeList& p) {
      if (p.size() - 1 == len && p.back() == v) found.push_back(p);
    });
    if (!found.empty()) return found;
  }
  return {};
}

int product_sign(const SignedGraph& graph, const NodeList& path) {
  int sign = 1;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int e = edge_value(graph, path[i], path[i + 1]);
    if (e == 0) throw std::invalid_argument("consecutive path nodes are not adjacent");
    sign *= e;
  }
  return sign;
}

bool balanced_by_labeling(const SignedGraph& graph, const NodeList& nodes) {
  const std::size_t k = nodes.size();
  if (k <= 1) return true;
  if (k > 20) throw BudgetExceeded("too many nodes for labeling enumeration");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<int> signs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (int e = edge_value(graph, nodes[i], nodes[j]); e != 0) {
        pairs.emplace_back(i, j);
        signs.push_back(e);
      }
    }
  }
  // Node 0 fixed to +1; bit i-1 of mask is node i's label.
  for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
    auto label = [&](std::size_t i) { return i == 0 ? 1 : ((mask >> (i - 1)) & 1u ? -1 : 1); };
    bool ok = true;
    for (std::size_t e = 0; e < pairs.size() && ok; ++e) {
      ok = signs[e] == label(pairs[e].first) * label(pairs[e].second);
    }
    if (ok) return true;
  }
  return false;
}

CompatibilityRelation oracle_relation(const SignedGraph& graph, RelationKind kind,
                                      const Budget& budget) {
  check_nodes(graph, budget);
  const std::size_t n = graph.node_count();
  CompatibilityRelation r(kind, n);

  if (kind == RelationKind::SBP || kind == RelationKind::SBPH) {
    if (kind == RelationKind::SBPH) throw std::invalid_argument("no oracle for the heuristic");
    for (NodeId u = 0; u < n; ++u) {
      std::vector<std::uint32_t> best(n, std::numeric_limits<std::uint32_t>::max());
      for (const auto& p : enumerate_simple_paths(graph, u, budget.max_path_len, budget)) {
        if (p.size() < 2 || product_sign(graph, p) != 1) continue;
        const auto len = static_cast<std::uint32_t>(p.size() - 1);
        if (len >= best[p.back()]) continue;
        if (balanced_by_labeling(graph, p)) best[p.back()] = len;
      }
      for (NodeId v = u + 1; v < n; ++v) {
        if (best[v] != std::numeric_limits<std::uint32_t>::max()) r.set_compatible(u, v, best[v]);
      }
    }
    return r;
  }

  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const int direct = edge_value(graph, u, v);
      switch (kind) {
        case RelationKind::DPE:
          if (direct == 1) r.set_compatible(u, v, 1);
          break;
        case RelationKind::NNE: {
          if (direct == -1) break;
          auto paths = enumerate_shortest_paths(graph, u, v, budget);
          if (!paths.empty()) r.set_compatible(u, v, static_cast<std::uint32_t>(paths.front().size() - 1));
          break;
        }
        default: {
          auto paths = enumerate_shortest_paths(graph, u, v, budget);
          std::size_t pos = 0;
          std::size_t neg = 0;
          for (const auto& p : paths) (product_sign(graph, p) == 1 ? pos : neg) += 1;
          bool ok = false;
          if (kind == RelationKind::SPA) ok = pos > 0 && neg == 0;
          if (kind == RelationKind::SPM) ok = pos > 0 && pos >= neg;
          if (kind == RelationKind::SPO) ok = pos > 0;
          if (ok) r.set_compatible(u, v, static_cast<std::uint32_t>(paths.front().size() - 1));
        }
      }
    }
  }
  return r;
}

std::optional<OracleTeam> oracle_min_cost_team(const SignedGraph& graph,
                                               const CompatibilityRelation& relation,
                                               const SkillAssignment& skills, const Task& task,
                                               const Budget& budget) {
  check_nodes(graph, budget);
  if (task.size() > budget.max_team_size) throw BudgetExceeded("task exceeds the team-size budget");

  std::vector<NodeId> pool;
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    for (SkillId s : skills.skills_of(u)) {
      if (task.contains(s)) {
        pool.push_back(u);
        break;
      }
    }
  }

  std::optional<OracleTeam> best;
  std::vector<NodeId> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!chosen.empty()) {
      bool covers = true;
      for (SkillId s : task.required()) {
        covers = std::any_of(chosen.begin(), chosen.end(),
                             [&](NodeId u) { return skills.has_skill(u, s); });
        if (!covers) break;
      }
      if (covers) {
        std::uint32_t cost = 0;
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
          for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
            auto d = relation.distance(chosen[i], chosen[j]);
            ok = d.has_value();
            if (ok) cost = std::max(cost, *d);
          }
        }
        if (ok && (!best || cost < best->cost || (cost == best->cost && chosen < best->members))) {
          best = OracleTeam{chosen, cost};
        }
      }
    }
    if (chosen.size() == task.size()) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace signedteams::oracle
