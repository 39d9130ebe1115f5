#include "signedteams/path_counts.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace signedteams {

std::string to_string(PathCount value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

ShortestPathSignCounter::ShortestPathSignCounter(const SignedGraph& graph) : graph_(&graph) {
  const std::size_t n = graph.node_count();
  counts_.pos.assign(n, 0);
  counts_.neg.assign(n, 0);
  counts_.dist.assign(n, kUnreachable);
  queue_.reserve(n);
}

const PathCounts& ShortestPathSignCounter::run(NodeId source) {
  if (!graph_->contains(source)) throw std::out_of_range("source node not in graph");
  for (NodeId x : queue_) {
    counts_.pos[x] = 0;
    counts_.neg[x] = 0;
    counts_.dist[x] = kUnreachable;
  }
  queue_.clear();

  auto& pos = counts_.pos;
  auto& neg = counts_.neg;
  auto& dist = counts_.dist;
  counts_.source = source;
  pos[source] = 1;
  dist[source] = 0;
  queue_.push_back(source);

  // queue_ doubles as the FIFO (head index) and the record of touched nodes.
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const NodeId u = queue_[head];
    const std::uint32_t next = dist[u] + 1;
    for (const Neighbor& nb : graph_->neighbors(u)) {
      const NodeId x = nb.node;
      if (next > dist[x]) continue;
      // With FIFO order a node is first reached at its final distance, so a
      // strict improvement only ever happens from "unreached".
      if (dist[x] == kUnreachable) queue_.push_back(x);
      assert(dist[x] == kUnreachable || dist[x] == next);
      dist[x] = next;
      if (nb.sign == Sign::Positive) {
        pos[x] += pos[u];
        neg[x] += neg[u];
      } else {
        neg[x] += pos[u];
        pos[x] += neg[u];
      }
    }
  }
  return counts_;
}

PathCounts sp_sign_counts(const SignedGraph& graph, NodeId source) {
  ShortestPathSignCounter counter(graph);
  counter.run(source);
  return counter.counts();
}

}  // namespace signedteams
