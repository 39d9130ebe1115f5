#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "signedteams/balance.hpp"
#include "signedteams/signed_graph.hpp"

namespace signedteams {

enum class ReachStatus : std::uint8_t { Found, Unreachable, Unknown };

// Shortest structurally balanced paths from one source, per end sign.
// Lengths are kUnreachable where no path was found.
struct BalancedReach {
  NodeId source = kNoNode;
  std::vector<std::uint32_t> positive;
  std::vector<std::uint32_t> negative;
  // Set when the search stopped short of exhausting every balanced path
  // (length budget or expansion cap hit). Nodes without a positive path are
  // then Unknown rather than Unreachable.
  bool truncated = false;
  // Witness paths (source first), filled only when requested. Empty entries
  // where no path was found.
  std::vector<Path> positive_path;
  std::vector<Path> negative_path;

  ReachStatus status(NodeId v) const {
    if (positive[v] != kUnreachable) return ReachStatus::Found;
    return truncated ? ReachStatus::Unknown : ReachStatus::Unreachable;
  }
  std::optional<std::uint32_t> positive_length(NodeId v) const {
    if (positive[v] == kUnreachable) return std::nullopt;
    return positive[v];
  }
  std::uint32_t shortest_balanced(NodeId v) const { return std::min(positive[v], negative[v]); }
};

struct ExactSearchOptions {
  std::uint32_t max_path_len = 0;      // required, >= 1
  std::uint64_t max_expansions = 0;    // 0: unlimited
  bool record_paths = false;
  // Stop once every node has a positive path; negative lengths are then
  // whatever was seen on the way.
  bool positive_only = false;
};

// Iterative-deepening enumeration of balanced simple paths from `source` of
// at most max_path_len edges. Balance is hereditary along prefixes, so
// unbalanced prefixes are pruned, as are prefixes that cannot reach a node
// whose answer is still open within the current depth. Exhaustive within the
// budget: the returned lengths are exact minima over paths no longer than
// the budget.
BalancedReach sbp_exact_reachability(const SignedGraph& graph, NodeId source,
                                     const ExactSearchOptions& options);

// Layered search that keeps one representative balanced path per
// (node, end sign): the first one discovered, which is also a shortest one
// among those the search sees. Only representatives are extended, and an
// extension is kept only if the longer path is still balanced. Every path it
// reports is a genuine balanced path, but paths whose prefixes are not
// representatives are never seen.
BalancedReach sbp_heuristic_counts(const SignedGraph& graph, NodeId source,
                                   bool record_paths = false);

}  // namespace signedteams
