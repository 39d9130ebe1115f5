#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace signedteams {

using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Sign sign = Sign::Positive;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node = 0;
  Sign sign = Sign::Positive;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected signed graph in compressed adjacency form. Each node's neighbor
// list is sorted by node id, so edge lookups are a binary search. Immutable
// once built; share freely across threads.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Builds a graph over nodes 0..node_count-1. Throws GraphError on
  // self-loops, out-of-range endpoints, or a pair listed with both signs.
  // Identical duplicates are merged; `duplicates_merged` (if given) receives
  // how many were dropped. Labels default to the decimal node id.
  static SignedGraph from_edges(std::size_t node_count,
                                std::span<const Edge> edges,
                                std::vector<std::string> labels = {},
                                std::size_t* duplicates_merged = nullptr);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t negative_edge_count() const noexcept { return negative_edges_; }

  std::span<const Neighbor> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  std::optional<Sign> edge_sign(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return edge_sign(u, v).has_value(); }

  // Canonical edge list: u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const std::string& label(NodeId u) const { return labels_.at(u); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  bool contains(NodeId u) const noexcept { return u < node_count(); }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::size_t negative_edges_ = 0;
};

// Connected component id per node, numbered in order of smallest member.
std::vector<NodeId> connected_components(const SignedGraph& graph);

bool is_connected(const SignedGraph& graph);

// Induced subgraph on the largest connected component (ties go to the
// component containing the smallest node id). Labels are carried over.
SignedGraph largest_component(const SignedGraph& graph);

// Unsigned BFS hop distances from `source`; unreachable nodes get kUnreachable.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
std::vector<std::uint32_t> bfs_distances(const SignedGraph& graph, NodeId source);

// Largest finite eccentricity. One BFS per node.
std::uint32_t diameter(const SignedGraph& graph);

}  // namespace signedteams
