#include "signedteams/balance.hpp"

#include <algorithm>
#include <unordered_map>

#include <fmt/format.h>

namespace signedteams {

void validate_path(const SignedGraph& graph, std::span<const NodeId> path) {
  if (path.empty()) throw PathError("empty path");
  for (NodeId u : path) {
    if (!graph.contains(u)) throw PathError(fmt::format("node {} not in graph", u));
  }
  std::vector<NodeId> sorted(path.begin(), path.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PathError("path repeats a node");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!graph.has_edge(path[i], path[i + 1])) {
      throw PathError(fmt::format("({}, {}) is not an edge", graph.label(path[i]),
                                  graph.label(path[i + 1])));
    }
  }
}

Sign path_sign(const SignedGraph& graph, std::span<const NodeId> path) {
  Sign sign = Sign::Positive;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto s = graph.edge_sign(path[i], path[i + 1]);
    if (!s) {
      throw PathError(fmt::format("({}, {}) is not an edge", path[i], path[i + 1]));
    }
    sign = sign * *s;
  }
  return sign;
}

bool is_balanced_node_set(const SignedGraph& graph, std::span<const NodeId> nodes) {
  // Local index over the set; color 0 = unvisited, +1/-1 otherwise.
  std::unordered_map<NodeId, std::size_t> local;
  local.reserve(nodes.size() * 2);
  for (NodeId u : nodes) local.emplace(u, local.size());
  std::vector<NodeId> members(local.size());
  for (auto [node, idx] : local) members[idx] = node;

  std::vector<int> color(members.size(), 0);
  std::vector<std::size_t> stack;

  // Induced neighbors: scan adjacency when it is short, otherwise probe each
  // member pair by binary search.
  auto for_each_induced = [&](std::size_t i, auto&& fn) {
    const NodeId u = members[i];
    if (graph.degree(u) <= members.size()) {
      for (const Neighbor& nb : graph.neighbors(u)) {
        auto it = local.find(nb.node);
        if (it != local.end()) fn(it->second, nb.sign);
      }
    } else {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j == i) continue;
        if (auto s = graph.edge_sign(u, members[j])) fn(j, *s);
      }
    }
  };

  for (std::size_t start = 0; start < members.size(); ++start) {
    if (color[start] != 0) continue;
    color[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      bool ok = true;
      for_each_induced(i, [&](std::size_t j, Sign s) {
        const int want = color[i] * to_int(s);
        if (color[j] == 0) {
          color[j] = want;
          stack.push_back(j);
        } else if (color[j] != want) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool is_balanced_path(const SignedGraph& graph, std::span<const NodeId> path) {
  validate_path(graph, path);
  return is_balanced_node_set(graph, path);
}

}  // namespace signedteams
