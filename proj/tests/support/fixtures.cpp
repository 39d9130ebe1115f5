#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "signedteams/rng.hpp"
#include "signedteams/synthetic.hpp"

namespace signedteams::testing {

SignedGraph labeled_graph(std::initializer_list<std::tuple<const char*, const char*, int>> edges) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const char* label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };
  std::vector<Edge> list;
  for (const auto& [a, b, s] : edges) {
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    list.push_back({u, v, s > 0 ? Sign::Positive : Sign::Negative});
  }
  const std::size_t n = labels.size();
  return SignedGraph::from_edges(n, list, std::move(labels));
}

NodeId id(const SignedGraph& graph, const std::string& label) {
  auto v = graph.find(label);
  if (!v) throw std::invalid_argument("no node " + label);
  return *v;
}

Path path_of(const SignedGraph& graph, std::initializer_list<const char*> labels) {
  Path p;
  for (const char* l : labels) p.push_back(id(graph, l));
  return p;
}

SignedGraph triangle_fixture() {
  return labeled_graph({{"u", "x1", +1},
                        {"x1", "v", -1},
                        {"u", "x2", +1},
                        {"x2", "x1", -1},
                        {"x2", "x3", +1},
                        {"x3", "x4", +1},
                        {"x4", "v", +1}});
}

SignedGraph prefix_fixture() {
  return labeled_graph({{"u", "x1", +1},
                        {"x1", "x2", +1},
                        {"x2", "x4", +1},
                        {"x4", "x5", +1},
                        {"x5", "v", +1},
                        {"u", "x3", +1},
                        {"x3", "x4", +1},
                        {"x3", "v", -1}});
}

std::vector<EnsembleGraph> connected_ensemble(std::size_t count, std::uint64_t seed,
                                              std::size_t max_nodes) {
  static constexpr double kEdgeP[] = {0.2, 0.4};
  static constexpr double kNegative[] = {0.2, 0.5};
  std::vector<EnsembleGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double p = kEdgeP[i % 2];
    const double neg = kNegative[(i / 2) % 2];
    for (std::uint64_t attempt = 0;; ++attempt) {
      const std::uint64_t s = derive_seed(seed, {i, attempt});
      Rng rng(s);
      const std::size_t n = std::uniform_int_distribution<std::size_t>(4, max_nodes)(rng);
      SignedGraph g = random_gnp_signed_graph(n, p, neg, rng);
      if (is_connected(g)) {
        out.push_back({std::move(g), s, p, neg});
        break;
      }
    }
  }
  return out;
}

SkillAssignment random_skills(std::size_t users, std::size_t skill_count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<SkillId>> per_user(users);
  std::uniform_int_distribution<std::size_t> how_many(0, 2);
  std::uniform_int_distribution<SkillId> skill(0, static_cast<SkillId>(skill_count - 1));
  std::uniform_int_distribution<NodeId> user(0, static_cast<NodeId>(users - 1));
  for (auto& list : per_user) {
    for (std::size_t k = how_many(rng); k > 0; --k) list.push_back(skill(rng));
  }
  for (SkillId s = 0; s < skill_count; ++s) {
    bool held = std::any_of(per_user.begin(), per_user.end(), [&](const auto& l) {
      return std::find(l.begin(), l.end(), s) != l.end();
    });
    if (!held) per_user[user(rng)].push_back(s);
  }
  std::vector<std::string> names;
  for (SkillId s = 0; s < skill_count; ++s) names.push_back("k" + std::to_string(s));
  return SkillAssignment::from_lists(std::move(per_user), std::move(names));
}

SignedGraph complete_positive(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, Sign::Positive});
  }
  return SignedGraph::from_edges(n, edges);
}

RelationOptions exhaustive_options(const SignedGraph& graph) {
  RelationOptions o;
  o.sbp_max_path_len = static_cast<std::uint32_t>(std::max<std::size_t>(graph.node_count(), 2) - 1);
  o.workers = 1;
  return o;
}

}  // namespace signedteams::testing
