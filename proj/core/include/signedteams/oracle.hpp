#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "signedteams/compat_relation.hpp"
#include "signedteams/signed_graph.hpp"
#include "signedteams/skills.hpp"

// Brute-force references for testing. Nothing here calls into the
// compatibility engine, the balance module, or team formation; each answer
// is rebuilt from the graph by exhaustive enumeration.
namespace signedteams::oracle {

struct Budget {
  std::size_t max_nodes = 12;
  std::uint32_t max_path_len = 11;
  std::size_t max_team_size = 4;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using NodeList = std::vector<NodeId>;

// Every shortest u-v path, found by iterative deepening over simple paths
// (no BFS layering). Empty if v is unreachable within the budget.
std::vector<NodeList> enumerate_shortest_paths(const SignedGraph& graph, NodeId u, NodeId v,
                                               const Budget& budget = {});

// Every simple path starting at u with at most max_len edges.
std::vector<NodeList> enumerate_simple_paths(const SignedGraph& graph, NodeId u,
                                             std::uint32_t max_len, const Budget& budget = {});

// Product of edge signs, recomputed edge by edge.
int product_sign(const SignedGraph& graph, const NodeList& path);

// Balance by trying every +/- labeling of the node set (2^(k-1) of them):
// balanced iff some labeling makes every induced edge's sign equal to the
// product of its endpoint labels.
bool balanced_by_labeling(const SignedGraph& graph, const NodeList& nodes);

// Membership straight from the definitions. SBP uses all simple paths of at
// most budget.max_path_len edges.
CompatibilityRelation oracle_relation(const SignedGraph& graph, RelationKind kind,
                                      const Budget& budget = {});

struct OracleTeam {
  std::vector<NodeId> members;
  std::uint32_t cost = 0;
};

// Minimum-cost compatible cover, scanning every subset of task-skill holders
// with at most |task| members. nullopt proves no compatible cover exists.
std::optional<OracleTeam> oracle_min_cost_team(const SignedGraph& graph,
                                               const CompatibilityRelation& relation,
                                               const SkillAssignment& skills, const Task& task,
                                               const Budget& budget = {});

}  // namespace signedteams::oracle
