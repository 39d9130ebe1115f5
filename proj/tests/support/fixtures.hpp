#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "signedteams/balance.hpp"
#include "signedteams/experiments.hpp"
#include "signedteams/signed_graph.hpp"
#include "signedteams/skills.hpp"

namespace signedteams::testing {

// Graph from (label, label, sign) triples; nodes are numbered in order of
// first appearance.
SignedGraph labeled_graph(std::initializer_list<std::tuple<const char*, const char*, int>> edges);

NodeId id(const SignedGraph& graph, const std::string& label);
Path path_of(const SignedGraph& graph, std::initializer_list<const char*> labels);

// Triangle counterexample: the only shortest u-v path is negative, while a
// longer route through x3 and x4 is positive and balanced.
SignedGraph triangle_fixture();

// Prefix counterexample: the best balanced u-x4 path (through x3) cannot be
// extended to v, but a longer route through x1, x2 can.
SignedGraph prefix_fixture();

struct EnsembleGraph {
  SignedGraph graph;
  std::uint64_t seed = 0;
  double edge_probability = 0;
  double negative_fraction = 0;
};

// Seeded connected G(n, p) graphs with 4 <= n <= max_nodes, cycling through
// p in {0.2, 0.4} and negative fraction in {0.2, 0.5}. Disconnected draws
// are rejected and redrawn.
std::vector<EnsembleGraph> connected_ensemble(std::size_t count, std::uint64_t seed,
                                              std::size_t max_nodes = 12);

// Each user gets 0-2 skills out of `skill_count`, every skill gets at least
// one holder.
SkillAssignment random_skills(std::size_t users, std::size_t skill_count, std::uint64_t seed);

// All-positive complete graph on n nodes.
SignedGraph complete_positive(std::size_t n);

// Relation with exhaustive exact SBP on small graphs.
RelationOptions exhaustive_options(const SignedGraph& graph);

}  // namespace signedteams::testing
