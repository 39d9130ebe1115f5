#pragma once

#include <span>
#include <vector>

#include "signedteams/signed_graph.hpp"

namespace signedteams {

// A walk listed node by node; valid paths are simple and every consecutive
// pair is an edge. Length is the number of edges.
using Path = std::vector<NodeId>;

class PathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Product of the edge signs along `path`. A single node is the empty
// product, +1. Throws PathError if a consecutive pair is not an edge.
Sign path_sign(const SignedGraph& graph, std::span<const NodeId> path);

// True iff the subgraph induced by `nodes` has no cycle with an odd number
// of negative edges. Two-colors each induced component: positive edges force
// equal colors, negative edges opposite ones.
bool is_balanced_node_set(const SignedGraph& graph, std::span<const NodeId> nodes);

// Balance of the subgraph induced by the path's nodes, chords included.
// Throws PathError if the path repeats a node or uses a non-edge.
bool is_balanced_path(const SignedGraph& graph, std::span<const NodeId> path);

void validate_path(const SignedGraph& graph, std::span<const NodeId> path);

}  // namespace signedteams
