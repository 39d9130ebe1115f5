#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "signedteams/signed_graph.hpp"

namespace signedteams {

// Shortest-path counts grow exponentially with depth; 128 bits keeps the
// comparisons exact on real networks.
__extension__ typedef unsigned __int128 PathCount;

std::string to_string(PathCount value);

// Positive/negative shortest-path counts and hop distance from one source.
// Unreachable nodes have dist == kUnreachable and zero counts.
struct PathCounts {
  NodeId source = kNoNode;
  std::vector<PathCount> pos;
  std::vector<PathCount> neg;
  std::vector<std::uint32_t> dist;
};

// Reusable single-source counter. Buffers are sized once per graph and only
// the entries touched by the previous run are reset, so repeated runs cost
// O(reached nodes + their edges).
class ShortestPathSignCounter {
 public:
  explicit ShortestPathSignCounter(const SignedGraph& graph);

  // Modified BFS: when x is reached from u along a shortest path, a positive
  // edge carries (N+, N-) of u over to x and a negative edge swaps them.
  // Throws std::out_of_range for an unknown source.
  const PathCounts& run(NodeId source);

  const PathCounts& counts() const noexcept { return counts_; }

  // Nodes reached by the last run, in BFS order.
  std::span<const NodeId> reached() const noexcept { return queue_; }

 private:
  const SignedGraph* graph_;
  PathCounts counts_;
  std::vector<NodeId> queue_;
};

PathCounts sp_sign_counts(const SignedGraph& graph, NodeId source);

}  // namespace signedteams
