#include "signedteams/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "signedteams/parallel.hpp"
#include "signedteams/path_counts.hpp"

namespace signedteams {

double DatasetSummary::negative_pct() const {
  return edges == 0 ? 0.0 : 100.0 * static_cast<double>(negative_edges) / static_cast<double>(edges);
}

std::string DatasetSummary::negative_pct_label() const {
  if (edges == 0) return "0.0";
  // Integer arithmetic so 29.2763... never rounds up.
  const std::uint64_t tenths = negative_edges * 1000 / edges;
  return fmt::format("{}.{}", tenths / 10, tenths % 10);
}

DatasetSummary summarize(const SignedGraph& graph, const SkillAssignment* skills) {
  DatasetSummary s;
  s.users = graph.node_count();
  s.edges = graph.edge_count();
  s.negative_edges = graph.negative_edge_count();
  s.diameter = diameter(graph);
  s.skills = skills != nullptr ? skills->universe_size() : 0;
  return s;
}

std::vector<SkillId> held_skills(const SkillAssignment& skills) {
  std::vector<SkillId> out;
  for (SkillId s = 0; s < skills.universe_size(); ++s) {
    if (!skills.users_with(s).empty()) out.push_back(s);
  }
  return out;
}

namespace {

std::uint64_t count_skill_pairs(const SkillPairMatrix& m, std::span<const SkillId> held) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < held.size(); ++i) {
    for (std::size_t j = i + 1; j < held.size(); ++j) c += m.test(held[i], held[j]);
  }
  return c;
}

void finish_row(CompatStatsRow& row, std::size_t n, const SkillAssignment* skills,
                const SkillPairMatrix* skill_pairs) {
  row.total_pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  row.pct_users = row.total_pairs == 0
                      ? 100.0
                      : 100.0 * static_cast<double>(row.compatible_pairs) / static_cast<double>(row.total_pairs);
  row.avg_distance = row.compatible_pairs == 0
                         ? 0.0
                         : static_cast<double>(row.distance_sum) / static_cast<double>(row.compatible_pairs);
  if (skills != nullptr && skill_pairs != nullptr) {
    const auto held = held_skills(*skills);
    row.total_skill_pairs = held.size() < 2 ? 0 : held.size() * (held.size() - 1) / 2;
    row.compatible_skill_pairs = count_skill_pairs(*skill_pairs, held);
    row.pct_skills = row.total_skill_pairs == 0
                         ? 100.0
                         : 100.0 * static_cast<double>(row.compatible_skill_pairs) /
                               static_cast<double>(row.total_skill_pairs);
  }
}

bool is_streaming_kind(RelationKind k) { return k != RelationKind::SBP && k != RelationKind::SBPH; }

// Per-worker accumulators for the streaming pass.
struct StreamAccumulator {
  std::vector<std::uint64_t> pairs;
  std::vector<std::uint64_t> distance_sum;
  std::vector<SkillPairMatrix> skill_pairs;
  std::vector<std::vector<std::uint64_t>> covered;
  std::optional<ShortestPathSignCounter> counter;
  std::vector<std::uint32_t> negative_mark;  // stamp = source + 1
};

std::vector<CompatStatsRow> stream_stats(const SignedGraph& graph, const SkillAssignment* skills,
                                         const std::vector<RelationKind>& kinds, unsigned workers) {
  const std::size_t n = graph.node_count();
  const std::size_t k = kinds.size();
  const std::size_t skill_count = skills != nullptr ? skills->universe_size() : 0;
  const std::size_t words = (skill_count + 63) / 64;
  workers = resolve_workers(workers);

  std::vector<StreamAccumulator> acc(workers);
  for (auto& a : acc) {
    a.pairs.assign(k, 0);
    a.distance_sum.assign(k, 0);
    if (skills != nullptr) {
      a.skill_pairs.assign(k, SkillPairMatrix(skill_count));
      a.covered.assign(k, std::vector<std::uint64_t>(words, 0));
    }
  }

  parallel_for(n, workers, [&](std::size_t index, unsigned worker) {
    const auto u = static_cast<NodeId>(index);
    auto& a = acc[worker];
    if (!a.counter) {
      a.counter.emplace(graph);
      a.negative_mark.assign(n, 0);
    }
    const PathCounts& pc = a.counter->run(u);
    for (const Neighbor& nb : graph.neighbors(u)) {
      if (nb.sign == Sign::Negative) a.negative_mark[nb.node] = u + 1;
    }
    const bool with_skills = skills != nullptr && !skills->skills_of(u).empty();

    for (std::size_t ki = 0; ki < k; ++ki) {
      const RelationKind kind = kinds[ki];
      std::uint64_t pairs = 0;
      std::uint64_t dsum = 0;
      std::vector<std::uint64_t>* covered = with_skills ? &a.covered[ki] : nullptr;
      if (covered != nullptr) std::fill(covered->begin(), covered->end(), 0);

      for (NodeId v : a.counter->reached()) {
        bool ok;
        if (v == u) {
          ok = true;
        } else {
          switch (kind) {
            case RelationKind::DPE:
              ok = pc.dist[v] == 1 && a.negative_mark[v] != u + 1;
              break;
            case RelationKind::NNE:
              ok = a.negative_mark[v] != u + 1;
              break;
            default:
              ok = sp_compatible(kind, pc.pos[v], pc.neg[v]);
          }
        }
        if (!ok) continue;
        if (v > u) {
          ++pairs;
          dsum += pc.dist[v];
        }
        if (covered != nullptr) {
          for (SkillId t : skills->skills_of(v)) (*covered)[t / 64] |= std::uint64_t{1} << (t % 64);
        }
      }
      a.pairs[ki] += pairs;
      a.distance_sum[ki] += dsum;
      if (covered != nullptr) {
        for (SkillId s : skills->skills_of(u)) {
          auto dst = a.skill_pairs[ki].row(s);
          for (std::size_t w = 0; w < words; ++w) dst[w] |= (*covered)[w];
        }
      }
    }
  });

  std::vector<CompatStatsRow> rows(k);
  for (std::size_t ki = 0; ki < k; ++ki) {
    rows[ki].kind = kinds[ki];
    SkillPairMatrix merged(skill_count);
    for (auto& a : acc) {
      rows[ki].compatible_pairs += a.pairs[ki];
      rows[ki].distance_sum += a.distance_sum[ki];
      if (skills != nullptr) merged.merge(a.skill_pairs[ki]);
    }
    finish_row(rows[ki], n, skills, skills != nullptr ? &merged : nullptr);
  }
  return rows;
}

}  // namespace

CompatStatsRow stats_from_relation(const CompatibilityRelation& relation,
                                   const SkillAssignment* skills) {
  CompatStatsRow row;
  row.kind = relation.kind();
  const std::size_t n = relation.node_count();
  for (NodeId u = 0; u < n; ++u) {
    auto r = relation.row(u);
    for (NodeId v = u + 1; v < n; ++v) {
      if (r[v] <= CompatibilityRelation::kMaxDistance) {
        ++row.compatible_pairs;
        row.distance_sum += r[v];
      } else if (r[v] == CompatibilityRelation::kUnknown) {
        ++row.unknown_pairs;
      }
    }
  }
  if (skills != nullptr) {
    const auto m = compatible_skill_pairs(relation, *skills);
    finish_row(row, n, skills, &m);
  } else {
    finish_row(row, n, nullptr, nullptr);
  }
  return row;
}

std::vector<CompatStatsRow> run_compat_stats(const SignedGraph& graph,
                                             const SkillAssignment* skills,
                                             const StatsOptions& options) {
  std::vector<RelationKind> streamed;
  for (RelationKind k : options.kinds) {
    if (is_streaming_kind(k)) streamed.push_back(k);
  }
  std::vector<CompatStatsRow> streamed_rows;
  if (!streamed.empty()) streamed_rows = stream_stats(graph, skills, streamed, options.workers);

  RelationOptions relation_options = options.relation;
  if (relation_options.workers == 0) relation_options.workers = options.workers;

  std::vector<CompatStatsRow> rows;
  std::size_t next_streamed = 0;
  for (RelationKind k : options.kinds) {
    if (is_streaming_kind(k)) {
      rows.push_back(streamed_rows[next_streamed++]);
    } else {
      rows.push_back(stats_from_relation(build_relation(graph, k, relation_options), skills));
    }
  }
  return rows;
}

void write_stats_csv(std::ostream& out, const std::vector<CompatStatsRow>& rows) {
  out << "kind,pct_users,pct_skills,avg_dist\n";
  for (const auto& r : rows) {
    fmt::print(out, "{},{:.4f},{:.4f},{:.4f}\n", to_string(r.kind), r.pct_users, r.pct_skills,
               r.avg_distance);
  }
}

void write_stats_table(std::ostream& out, const std::vector<CompatStatsRow>& rows) {
  fmt::print(out, "{:<14}", "");
  for (const auto& r : rows) fmt::print(out, "{:>9}", to_string(r.kind));
  fmt::print(out, "\n{:<14}", "comp. users");
  for (const auto& r : rows) fmt::print(out, "{:>9.2f}", r.pct_users);
  fmt::print(out, "\n{:<14}", "comp. skills");
  for (const auto& r : rows) fmt::print(out, "{:>9.2f}", r.pct_skills);
  fmt::print(out, "\n{:<14}", "avg distance");
  for (const auto& r : rows) fmt::print(out, "{:>9.2f}", r.avg_distance);
  out << '\n';
  for (const auto& r : rows) {
    if (r.unknown_pairs != 0) {
      fmt::print(out, "{}: {} pair(s) unknown (search budget exhausted)\n", to_string(r.kind),
                 r.unknown_pairs);
    }
  }
}

std::vector<Task> sample_tasks(const SkillAssignment& skills, std::size_t size, std::size_t count,
                               std::uint64_t seed) {
  auto pool = held_skills(skills);
  if (size == 0) throw SkillError("task size must be positive");
  if (pool.size() < size) {
    throw SkillError(fmt::format("cannot draw {} distinct skills: only {} skills have holders",
                                 size, pool.size()));
  }
  Rng rng = make_rng(seed, {0x7a5c, size});
  std::vector<Task> tasks;
  tasks.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Partial Fisher-Yates over a fresh copy keeps draws independent.
    auto work = pool;
    for (std::size_t j = 0; j < size; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, work.size() - 1);
      std::swap(work[j], work[pick(rng)]);
    }
    tasks.push_back(Task::make({work.begin(), work.begin() + static_cast<std::ptrdiff_t>(size)}, skills));
  }
  return tasks;
}

std::vector<PolicyConfig> ExperimentSpec::default_policies() {
  std::vector<PolicyConfig> out;
  for (auto name : {"LCMD", "LCMC", "RFMD", "RFMC", "LCRND"}) out.push_back(*parse_policy_name(name));
  return out;
}

std::vector<TeamExperimentRow> run_team_experiments(const SignedGraph& graph,
                                                    const SkillAssignment& skills,
                                                    const ExperimentSpec& spec) {
  if (spec.tasks_per_size < 1) throw std::invalid_argument("tasks_per_size must be >= 1");
  std::vector<std::vector<Task>> tasks;
  for (std::size_t k : spec.task_sizes) {
    tasks.push_back(sample_tasks(skills, k, spec.tasks_per_size, spec.seed));
  }
  RelationOptions relation_options = spec.relation;
  if (relation_options.workers == 0) relation_options.workers = spec.workers;

  std::vector<TeamExperimentRow> rows;
  for (RelationKind kind : spec.kinds) {
    const auto relation = build_relation(graph, kind, relation_options);
    const TeamFormer former(relation, skills);
    const auto skill_pairs = compatible_skill_pairs(relation, skills);

    for (std::size_t si = 0; si < spec.task_sizes.size(); ++si) {
      const auto& batch = tasks[si];
      const std::size_t k = spec.task_sizes[si];
      const std::size_t p = spec.policies.size();

      // costs[t * p + j]: cost of task t under policy j, or nullopt.
      std::vector<std::optional<std::uint32_t>> costs(batch.size() * p);
      parallel_for(batch.size() * p, spec.workers, [&](std::size_t idx, unsigned) {
        const std::size_t t = idx / p;
        PolicyConfig config = spec.policies[idx % p];
        config.workers = 1;
        if (config.user_policy == UserPolicy::Random) {
          config.seed = derive_seed(spec.seed, {static_cast<std::uint64_t>(kind), k, t});
        }
        auto result = former.form(batch[t], config);
        if (result.team) costs[idx] = result.team->cost;
      });

      for (std::size_t j = 0; j < p; ++j) {
        TeamExperimentRow row;
        row.kind = kind;
        row.task_size = k;
        row.policy = policy_name(spec.policies[j]);
        row.tasks = batch.size();
        std::uint64_t cost_sum = 0;
        for (std::size_t t = 0; t < batch.size(); ++t) {
          if (const auto& c = costs[t * p + j]) {
            ++row.solved;
            cost_sum += *c;
          }
        }
        row.solution_pct = 100.0 * static_cast<double>(row.solved) / static_cast<double>(row.tasks);
        if (row.solved > 0) row.avg_cost = static_cast<double>(cost_sum) / static_cast<double>(row.solved);
        rows.push_back(std::move(row));
      }

      TeamExperimentRow max_row;
      max_row.kind = kind;
      max_row.task_size = k;
      max_row.policy = "MAX";
      max_row.tasks = batch.size();
      for (const Task& task : batch) {
        auto req = task.required();
        bool all = true;
        for (std::size_t a = 0; a < req.size() && all; ++a) {
          for (std::size_t b = a + 1; b < req.size() && all; ++b) all = skill_pairs.test(req[a], req[b]);
        }
        max_row.solved += all;
      }
      max_row.solution_pct =
          100.0 * static_cast<double>(max_row.solved) / static_cast<double>(max_row.tasks);
      rows.push_back(std::move(max_row));
    }
  }
  return rows;
}

void write_team_csv(std::ostream& out, const std::vector<TeamExperimentRow>& rows) {
  out << "kind,k,policy,solution_pct,avg_cost\n";
  for (const auto& r : rows) {
    fmt::print(out, "{},{},{},{:.2f},{}\n", to_string(r.kind), r.task_size, r.policy,
               r.solution_pct, r.avg_cost ? fmt::format("{:.4f}", *r.avg_cost) : std::string());
  }
}

std::vector<BaselineRow> run_baseline_comparison(const SignedGraph& graph,
                                                 const SkillAssignment& skills,
                                                 const ExperimentSpec& spec) {
  RelationOptions relation_options = spec.relation;
  if (relation_options.workers == 0) relation_options.workers = spec.workers;

  std::vector<CompatibilityRelation> relations;
  for (RelationKind kind : spec.kinds) relations.push_back(build_relation(graph, kind, relation_options));

  std::vector<BaselineRow> rows;
  for (UnsignedMode mode : {UnsignedMode::IgnoreSign, UnsignedMode::DeleteNegative}) {
    const SignedGraph plain = unsigned_transform(graph, mode);
    for (std::size_t k : spec.task_sizes) {
      const auto tasks = sample_tasks(skills, k, spec.tasks_per_size, spec.seed);
      std::vector<std::optional<Team>> teams(tasks.size());
      parallel_for(tasks.size(), spec.workers, [&](std::size_t t, unsigned) {
        teams[t] = rarest_first_unsigned(plain, skills, tasks[t]).team;
      });
      for (std::size_t ki = 0; ki < spec.kinds.size(); ++ki) {
        BaselineRow row;
        row.mode = mode;
        row.kind = spec.kinds[ki];
        row.task_size = k;
        for (const auto& team : teams) {
          if (!team) continue;
          ++row.teams;
          row.compatible += team_compatible(relations[ki], team->members);
        }
        row.compatible_pct =
            row.teams == 0 ? 0.0 : 100.0 * static_cast<double>(row.compatible) / static_cast<double>(row.teams);
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_baseline_csv(std::ostream& out, const std::vector<BaselineRow>& rows) {
  out << "mode,kind,k,teams,compatible_pct\n";
  for (const auto& r : rows) {
    fmt::print(out, "{},{},{},{},{:.2f}\n", to_string(r.mode), to_string(r.kind), r.task_size,
               r.teams, r.compatible_pct);
  }
}

void write_relation_csv(std::ostream& out, const SignedGraph& graph,
                        const CompatibilityRelation& relation) {
  out << "u,v,kind,distance\n";
  const auto kind = to_string(relation.kind());
  for (NodeId u = 0; u < relation.node_count(); ++u) {
    auto row = relation.row(u);
    for (NodeId v = u + 1; v < relation.node_count(); ++v) {
      if (row[v] <= CompatibilityRelation::kMaxDistance) {
        fmt::print(out, "{},{},{},{}\n", graph.label(u), graph.label(v), kind, row[v]);
      }
    }
  }
}

void write_team_row(std::ostream& out, const SignedGraph& graph, const SkillAssignment& skills,
                    const Team& team, RelationKind kind, const PolicyConfig& policy) {
  std::vector<std::string> members;
  for (NodeId u : team.members) members.push_back(graph.label(u));
  std::vector<std::string> covered;
  for (SkillId s : team.covered) covered.push_back(skills.name(s));
  fmt::print(out, "{},{},{},{},{},{}\n", fmt::join(members, " "), fmt::join(covered, " "),
             team.cost, to_string(kind), policy_name(policy),
             policy.seed ? std::to_string(*policy.seed) : std::string());
}

}  // namespace signedteams
