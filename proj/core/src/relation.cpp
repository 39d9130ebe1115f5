#include "signedteams/relation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include <fmt/format.h>

#include "signedteams/parallel.hpp"
#include "signedteams/sbp.hpp"

namespace signedteams {

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::DPE: return "DPE";
    case RelationKind::NNE: return "NNE";
    case RelationKind::SPA: return "SPA";
    case RelationKind::SPM: return "SPM";
    case RelationKind::SPO: return "SPO";
    case RelationKind::SBP: return "SBP";
    case RelationKind::SBPH: return "SBPH";
  }
  return "?";
}

std::optional<RelationKind> parse_relation_kind(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "SBP_H") upper = "SBPH";
  for (RelationKind k : kAllRelationKinds) {
    if (to_string(k) == upper) return k;
  }
  return std::nullopt;
}

CompatibilityRelation::CompatibilityRelation(RelationKind kind, std::size_t node_count)
    : kind_(kind), n_(node_count), codes_(node_count * node_count, kIncompatible) {
  for (std::size_t u = 0; u < n_; ++u) codes_[u * n_ + u] = 0;
}

void CompatibilityRelation::set_compatible(NodeId u, NodeId v, std::uint32_t distance) {
  if (u == v) throw RelationError("diagonal is fixed");
  if (distance == 0 || distance > kMaxDistance) {
    throw RelationError(fmt::format("distance {} outside 1..{}", distance, kMaxDistance));
  }
  codes_[index(u, v)] = codes_[index(v, u)] = static_cast<std::uint8_t>(distance);
}

void CompatibilityRelation::set_unknown(NodeId u, NodeId v) {
  if (u == v) throw RelationError("diagonal is fixed");
  codes_[index(u, v)] = codes_[index(v, u)] = kUnknown;
}

void CompatibilityRelation::set_incompatible(NodeId u, NodeId v) {
  if (u == v) throw RelationError("diagonal is fixed");
  codes_[index(u, v)] = codes_[index(v, u)] = kIncompatible;
}

std::size_t CompatibilityRelation::compatible_pair_count() const {
  std::size_t c = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) c += codes_[u * n_ + v] <= kMaxDistance;
  }
  return c;
}

std::size_t CompatibilityRelation::unknown_pair_count() const {
  std::size_t c = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) c += codes_[u * n_ + v] == kUnknown;
  }
  return c;
}

bool sp_compatible(RelationKind kind, PathCount pos, PathCount neg) {
  switch (kind) {
    case RelationKind::SPA: return pos >= 1 && neg == 0;
    case RelationKind::SPM: return pos >= 1 && pos >= neg;
    case RelationKind::SPO: return pos >= 1;
    default: throw RelationError("not a shortest-path relation");
  }
}

namespace {

std::uint8_t distance_code(std::uint32_t d) {
  if (d == 0 || d > CompatibilityRelation::kMaxDistance) {
    throw RelationError(fmt::format("distance {} cannot be stored (max {})", d,
                                    CompatibilityRelation::kMaxDistance));
  }
  return static_cast<std::uint8_t>(d);
}

// Takes the better of (u, v) and (v, u) for every pair. Compatible beats
// unknown beats incompatible; shorter distances win.
void symmetrize_min(CompatibilityRelation& r) {
  const std::size_t n = r.node_count();
  for (NodeId u = 0; u < n; ++u) {
    auto row_u = RelationBuilderAccess::mutable_row(r, u);
    for (NodeId v = u + 1; v < n; ++v) {
      auto row_v = RelationBuilderAccess::mutable_row(r, v);
      const std::uint8_t a = row_u[v];
      const std::uint8_t b = row_v[u];
      // Codes order as distance < kUnknown < kIncompatible.
      row_u[v] = row_v[u] = std::min(a, b);
    }
  }
}

template <class FillRow>
CompatibilityRelation build_rows(const SignedGraph& graph, RelationKind kind, unsigned workers,
                                 FillRow&& fill) {
  CompatibilityRelation r(kind, graph.node_count());
  parallel_for(graph.node_count(), workers, [&](std::size_t u, unsigned worker) {
    fill(static_cast<NodeId>(u), worker, RelationBuilderAccess::mutable_row(r, static_cast<NodeId>(u)));
  });
  return r;
}

}  // namespace

CompatibilityRelation build_relation(const SignedGraph& graph, RelationKind kind,
                                     const RelationOptions& options) {
  const std::size_t n = graph.node_count();
  if (n > options.max_dense_nodes) {
    throw RelationError(fmt::format("{} nodes exceeds the dense relation limit of {}", n,
                                    options.max_dense_nodes));
  }
  const unsigned workers = resolve_workers(options.workers);

  switch (kind) {
    case RelationKind::DPE: {
      CompatibilityRelation r(kind, n);
      for (const Edge& e : graph.edges()) {
        if (e.sign == Sign::Positive) r.set_compatible(e.u, e.v, 1);
      }
      return r;
    }
    case RelationKind::NNE:
      return build_rows(graph, kind, workers, [&](NodeId u, unsigned, std::span<std::uint8_t> row) {
        auto dist = bfs_distances(graph, u);
        for (NodeId v = 0; v < n; ++v) {
          if (v != u && dist[v] != kUnreachable) row[v] = distance_code(dist[v]);
        }
        for (const Neighbor& nb : graph.neighbors(u)) {
          if (nb.sign == Sign::Negative) row[nb.node] = CompatibilityRelation::kIncompatible;
        }
      });
    case RelationKind::SPA:
    case RelationKind::SPM:
    case RelationKind::SPO: {
      std::vector<std::optional<ShortestPathSignCounter>> counters(workers);
      return build_rows(graph, kind, workers, [&](NodeId u, unsigned worker, std::span<std::uint8_t> row) {
        auto& counter = counters[worker];
        if (!counter) counter.emplace(graph);
        const PathCounts& pc = counter->run(u);
        for (NodeId v : counter->reached()) {
          if (v != u && sp_compatible(kind, pc.pos[v], pc.neg[v])) row[v] = distance_code(pc.dist[v]);
        }
      });
    }
    case RelationKind::SBP: {
      if (n > options.sbp_max_nodes) {
        throw RelationError(fmt::format(
            "exact SBP refused: {} nodes exceeds the budget of {} (exponential search)", n,
            options.sbp_max_nodes));
      }
      ExactSearchOptions search;
      search.max_path_len = options.sbp_max_path_len != 0 ? options.sbp_max_path_len
                                                          : diameter(graph) + 2;
      search.max_expansions = options.sbp_max_expansions;
      search.positive_only = true;
      auto r = build_rows(graph, kind, workers, [&](NodeId u, unsigned, std::span<std::uint8_t> row) {
        auto reach = sbp_exact_reachability(graph, u, search);
        for (NodeId v = 0; v < n; ++v) {
          if (v == u) continue;
          switch (reach.status(v)) {
            case ReachStatus::Found: row[v] = distance_code(reach.positive[v]); break;
            case ReachStatus::Unknown: row[v] = CompatibilityRelation::kUnknown; break;
            case ReachStatus::Unreachable: break;
          }
        }
      });
      symmetrize_min(r);
      return r;
    }
    case RelationKind::SBPH: {
      auto r = build_rows(graph, kind, workers, [&](NodeId u, unsigned, std::span<std::uint8_t> row) {
        auto reach = sbp_heuristic_counts(graph, u);
        for (NodeId v = 0; v < n; ++v) {
          if (v != u && reach.positive[v] != kUnreachable) row[v] = distance_code(reach.positive[v]);
        }
      });
      symmetrize_min(r);
      return r;
    }
  }
  throw RelationError("unknown relation kind");
}

std::vector<std::uint64_t> skill_compat_degrees(const CompatibilityRelation& relation,
                                                const SkillAssignment& skills) {
  const std::size_t n = relation.node_count();
  if (skills.user_count() != n) throw SkillError("skill assignment and relation disagree on size");

  // cd(s) = sum over holders u of s of W(u) - #{compatible ordered pairs of
  // holders of s}, where W(u) = sum of |skills(v)| over v compatible with u.
  std::vector<std::uint64_t> weight(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    if (skills.skills_of(u).empty()) continue;
    auto row = relation.row(u);
    std::uint64_t w = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (row[v] <= CompatibilityRelation::kMaxDistance) w += skills.skills_of(v).size();
    }
    weight[u] = w;
  }

  std::vector<std::uint64_t> cd(skills.universe_size(), 0);
  for (SkillId s = 0; s < cd.size(); ++s) {
    auto holders = skills.users_with(s);
    std::uint64_t total = 0;
    for (NodeId u : holders) total += weight[u];
    for (NodeId u : holders) {
      auto row = relation.row(u);
      for (NodeId v : holders) total -= row[v] <= CompatibilityRelation::kMaxDistance;
    }
    cd[s] = total;
  }
  return cd;
}

std::uint64_t skill_compat_degree(const CompatibilityRelation& relation,
                                  const SkillAssignment& skills, SkillId s) {
  if (s >= skills.universe_size()) throw SkillError(fmt::format("unknown skill id {}", s));
  return skill_compat_degrees(relation, skills)[s];
}

void SkillPairMatrix::merge(const SkillPairMatrix& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
}

SkillPairMatrix compatible_skill_pairs(const CompatibilityRelation& relation,
                                       const SkillAssignment& skills) {
  const std::size_t n = relation.node_count();
  SkillPairMatrix m(skills.universe_size());
  std::vector<std::uint64_t> covered((skills.universe_size() + 63) / 64);
  for (NodeId u = 0; u < n; ++u) {
    auto mine = skills.skills_of(u);
    if (mine.empty()) continue;
    std::fill(covered.begin(), covered.end(), 0);
    auto row = relation.row(u);
    for (NodeId v = 0; v < n; ++v) {
      if (row[v] > CompatibilityRelation::kMaxDistance) continue;
      for (SkillId t : skills.skills_of(v)) covered[t / 64] |= std::uint64_t{1} << (t % 64);
    }
    for (SkillId s : mine) {
      auto dst = m.row(s);
      for (std::size_t w = 0; w < covered.size(); ++w) dst[w] |= covered[w];
    }
  }
  return m;
}

}  // namespace signedteams
