#include "signedteams/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace signedteams {

SkillAssignment generate_zipf_skills(const ZipfSkillOptions& options) {
  if (options.skills < 1) throw std::invalid_argument("need at least one skill");
  if (!(options.exponent > 0.0)) throw std::invalid_argument("Zipf exponent must be positive");
  if (!(options.mean_skills_per_user >= 1.0)) {
    throw std::invalid_argument("mean skills per user must be at least 1");
  }

  std::vector<double> weights(options.skills);
  for (std::size_t r = 0; r < options.skills; ++r) {
    weights[r] = std::pow(static_cast<double>(r + 1), -options.exponent);
  }
  std::discrete_distribution<std::size_t> zipf(weights.begin(), weights.end());
  std::geometric_distribution<std::size_t> extra(1.0 / options.mean_skills_per_user);

  Rng count_rng = make_rng(options.seed, {1});
  Rng skill_rng = make_rng(options.seed, {2});

  std::vector<std::vector<SkillId>> per_user(options.users);
  std::vector<char> taken(options.skills, 0);
  for (auto& list : per_user) {
    const std::size_t want = std::min(options.skills, 1 + extra(count_rng));
    std::size_t draws = 0;
    while (list.size() < want) {
      std::size_t s = zipf(skill_rng);
      // Very skewed distributions can make distinct draws slow; fall back to
      // the most frequent skill not yet held.
      if (taken[s] && ++draws > 64 * want) {
        s = static_cast<std::size_t>(std::find(taken.begin(), taken.end(), 0) - taken.begin());
      }
      if (taken[s]) continue;
      taken[s] = 1;
      list.push_back(static_cast<SkillId>(s));
    }
    for (SkillId s : list) taken[s] = 0;
  }

  std::vector<std::string> names(options.skills);
  for (std::size_t r = 0; r < options.skills; ++r) names[r] = "s" + std::to_string(r);
  return SkillAssignment::from_lists(std::move(per_user), std::move(names));
}

SignedGraph random_connected_signed_graph(std::size_t nodes, std::size_t edges,
                                          double negative_fraction, std::uint64_t seed) {
  if (nodes == 0) throw std::invalid_argument("need at least one node");
  const std::size_t max_edges = nodes * (nodes - 1) / 2;
  if (edges + 1 < nodes || edges > max_edges) {
    throw std::invalid_argument("edge count must lie in [nodes - 1, nodes * (nodes - 1) / 2]");
  }
  Rng rng = make_rng(seed, {3});
  std::bernoulli_distribution negative(negative_fraction);

  std::vector<NodeId> order(nodes);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Edge> list;
  list.reserve(edges);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges * 2);
  auto key = [](NodeId a, NodeId b) {
    return (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b);
  };
  auto add = [&](NodeId a, NodeId b) {
    if (a == b || !seen.insert(key(a, b)).second) return false;
    list.push_back({a, b, negative(rng) ? Sign::Negative : Sign::Positive});
    return true;
  };

  for (std::size_t i = 1; i < nodes; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    add(order[i], order[parent(rng)]);
  }
  std::uniform_int_distribution<NodeId> any(0, static_cast<NodeId>(nodes - 1));
  while (list.size() < edges) add(any(rng), any(rng));
  return SignedGraph::from_edges(nodes, list);
}

SignedGraph random_gnp_signed_graph(std::size_t nodes, double edge_probability,
                                    double negative_fraction, Rng& rng) {
  std::bernoulli_distribution present(edge_probability);
  std::bernoulli_distribution negative(negative_fraction);
  std::vector<Edge> list;
  for (NodeId u = 0; u < nodes; ++u) {
    for (NodeId v = u + 1; v < nodes; ++v) {
      if (present(rng)) list.push_back({u, v, negative(rng) ? Sign::Negative : Sign::Positive});
    }
  }
  return SignedGraph::from_edges(nodes, list);
}

}  // namespace signedteams
