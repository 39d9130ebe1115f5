#include "signedteams/signed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include <fmt/format.h>

namespace signedteams {

SignedGraph SignedGraph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                                    std::vector<std::string> labels,
                                    std::size_t* duplicates_merged) {
  if (node_count >= kNoNode) throw GraphError("too many nodes");
  if (!labels.empty() && labels.size() != node_count) {
    throw GraphError(fmt::format("expected {} labels, got {}", node_count, labels.size()));
  }

  SignedGraph g;
  if (labels.empty()) {
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);
  g.index_.reserve(node_count);
  for (NodeId i = 0; i < node_count; ++i) {
    if (!g.index_.emplace(g.labels_[i], i).second) {
      throw GraphError(fmt::format("duplicate node label '{}'", g.labels_[i]));
    }
  }

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw GraphError(fmt::format("edge ({}, {}) references a node outside 0..{}", e.u, e.v,
                                   node_count == 0 ? 0 : node_count - 1));
    }
    if (e.u == e.v) throw GraphError(fmt::format("self-loop on node '{}'", g.labels_[e.u]));
    canon.push_back(e.u < e.v ? e : Edge{e.v, e.u, e.sign});
  }
  std::sort(canon.begin(), canon.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });

  std::size_t merged = 0;
  for (const Edge& e : canon) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v) {
      if (g.edges_.back().sign != e.sign) {
        throw GraphError(fmt::format("conflicting signs for edge ({}, {})", g.labels_[e.u],
                                     g.labels_[e.v]));
      }
      ++merged;
      continue;
    }
    g.edges_.push_back(e);
    if (e.sign == Sign::Negative) ++g.negative_edges_;
  }
  if (duplicates_merged != nullptr) *duplicates_merged = merged;

  std::vector<std::size_t> degree(node_count, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(node_count + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), g.offsets_.begin() + 1);
  g.adjacency_.resize(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so each list fills in ascending neighbor order
  // for the v side; the u side needs a sort afterwards.
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.sign};
    g.adjacency_[cursor[e.v]++] = {e.u, e.sign};
  }
  for (std::size_t u = 0; u < node_count; ++u) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
  return g;
}

std::optional<Sign> SignedGraph::edge_sign(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return std::nullopt;
  // Search the shorter list.
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& n, NodeId x) { return n.node < x; });
  if (it == nbrs.end() || it->node != v) return std::nullopt;
  return it->sign;
}

std::optional<NodeId> SignedGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<NodeId> connected_components(const SignedGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<NodeId> comp(n, kNoNode);
  std::vector<NodeId> stack;
  NodeId next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != kNoNode) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : graph.neighbors(u)) {
        if (comp[nb.node] == kNoNode) {
          comp[nb.node] = next;
          stack.push_back(nb.node);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const SignedGraph& graph) {
  if (graph.node_count() <= 1) return true;
  auto comp = connected_components(graph);
  return std::all_of(comp.begin(), comp.end(), [](NodeId c) { return c == 0; });
}

SignedGraph largest_component(const SignedGraph& graph) {
  auto comp = connected_components(graph);
  if (comp.empty()) return graph;
  std::vector<std::size_t> sizes(*std::max_element(comp.begin(), comp.end()) + 1, 0);
  for (NodeId c : comp) ++sizes[c];
  const auto keep = static_cast<NodeId>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  std::vector<NodeId> remap(graph.node_count(), kNoNode);
  std::vector<std::string> labels;
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    if (comp[u] == keep) {
      remap[u] = static_cast<NodeId>(labels.size());
      labels.push_back(graph.label(u));
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (comp[e.u] == keep) edges.push_back({remap[e.u], remap[e.v], e.sign});
  }
  const std::size_t n = labels.size();
  return SignedGraph::from_edges(n, edges, std::move(labels));
}

std::vector<std::uint32_t> bfs_distances(const SignedGraph& graph, NodeId source) {
  std::vector<std::uint32_t> dist(graph.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(graph.node_count());
  dist.at(source) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    for (const Neighbor& nb : graph.neighbors(u)) {
      if (dist[nb.node] == kUnreachable) {
        dist[nb.node] = dist[u] + 1;
        queue.push_back(nb.node);
      }
    }
  }
  return dist;
}

std::uint32_t diameter(const SignedGraph& graph) {
  std::uint32_t best = 0;
  for (NodeId s = 0; s < graph.node_count(); ++s) {
    for (std::uint32_t d : bfs_distances(graph, s)) {
      if (d != kUnreachable) best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace signedteams
