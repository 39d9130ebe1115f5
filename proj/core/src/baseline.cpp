#include "signedteams/team.hpp"

#include <algorithm>

namespace signedteams {

std::string_view to_string(UnsignedMode mode) {
  return mode == UnsignedMode::IgnoreSign ? "ignore-sign" : "delete-negative";
}

SignedGraph unsigned_transform(const SignedGraph& graph, UnsignedMode mode) {
  std::vector<Edge> edges;
  edges.reserve(graph.edge_count());
  for (Edge e : graph.edges()) {
    if (mode == UnsignedMode::DeleteNegative && e.sign == Sign::Negative) continue;
    e.sign = Sign::Positive;
    edges.push_back(e);
  }
  return SignedGraph::from_edges(graph.node_count(), edges, graph.labels());
}

TeamResult rarest_first_unsigned(const SignedGraph& graph, const SkillAssignment& skills,
                                 const Task& task) {
  TeamResult result;
  SkillId rarest = task.required().front();
  for (SkillId s : task.required()) {
    const auto holders = skills.users_with(s).size();
    if (holders == 0) {
      result.failure = TeamFailure::MissingSkill;
      result.missing_skill = s;
      return result;
    }
    if (holders < skills.users_with(rarest).size()) rarest = s;
  }

  std::optional<Team> best;
  for (NodeId u : skills.users_with(rarest)) {
    const auto dist = bfs_distances(graph, u);
    std::vector<NodeId> members{u};
    bool complete = true;
    for (SkillId s : task.required()) {
      if (skills.has_skill(u, s)) continue;
      NodeId pick = kNoNode;
      for (NodeId v : skills.users_with(s)) {
        if (dist[v] == kUnreachable) continue;
        if (pick == kNoNode || dist[v] < dist[pick]) pick = v;
      }
      if (pick == kNoNode) {
        complete = false;
        break;
      }
      members.push_back(pick);
    }
    if (!complete) continue;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    std::uint32_t diameter = 0;
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      const auto from = bfs_distances(graph, members[i]);
      for (std::size_t j = i + 1; j < members.size(); ++j) diameter = std::max(diameter, from[members[j]]);
    }
    if (!best || diameter < best->cost || (diameter == best->cost && members < best->members)) {
      Team t;
      t.members = std::move(members);
      t.covered.assign(task.required().begin(), task.required().end());
      t.cost = diameter;
      best = std::move(t);
    }
  }
  if (!best) {
    result.failure = TeamFailure::NoCompatibleCompletion;
    return result;
  }
  result.team = std::move(best);
  return result;
}

}  // namespace signedteams
