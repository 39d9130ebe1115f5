#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "signedteams/compat_relation.hpp"
#include "signedteams/relation.hpp"
#include "signedteams/signed_graph.hpp"
#include "signedteams/skills.hpp"
#include "signedteams/synthetic.hpp"
#include "signedteams/team.hpp"

namespace signedteams {

struct Dataset {
  SignedGraph graph;
  SkillAssignment skills;
};

struct DatasetSummary {
  std::size_t users = 0;
  std::size_t edges = 0;
  std::size_t negative_edges = 0;
  std::uint32_t diameter = 0;
  std::size_t skills = 0;

  double negative_pct() const;
  // One decimal, truncated toward zero: 89 of 304 reads "29.2".
  std::string negative_pct_label() const;
};

DatasetSummary summarize(const SignedGraph& graph, const SkillAssignment* skills = nullptr);

// One row of the relation comparison table. Percentages are over unordered
// distinct user pairs and unordered pairs of distinct skills that have at
// least one holder; avg_distance is over compatible user pairs only.
struct CompatStatsRow {
  RelationKind kind = RelationKind::NNE;
  double pct_users = 0;
  double pct_skills = 0;
  double avg_distance = 0;
  std::uint64_t compatible_pairs = 0;
  std::uint64_t total_pairs = 0;
  std::uint64_t compatible_skill_pairs = 0;
  std::uint64_t total_skill_pairs = 0;
  std::uint64_t distance_sum = 0;
  std::uint64_t unknown_pairs = 0;  // exact SBP only
};

struct StatsOptions {
  std::vector<RelationKind> kinds{RelationKind::SPA, RelationKind::SPM, RelationKind::SPO,
                                  RelationKind::SBPH, RelationKind::SBP, RelationKind::NNE};
  RelationOptions relation;
  unsigned workers = 0;
};

// DPE, NNE and the shortest-path kinds are computed in one streaming pass of
// per-source BFS runs (no n x n matrix); SBP and SBPH materialize the
// relation first. `skills` may be null, in which case pct_skills is 0.
std::vector<CompatStatsRow> run_compat_stats(const SignedGraph& graph,
                                             const SkillAssignment* skills,
                                             const StatsOptions& options = {});

CompatStatsRow stats_from_relation(const CompatibilityRelation& relation,
                                   const SkillAssignment* skills);

// Header: kind,pct_users,pct_skills,avg_dist
void write_stats_csv(std::ostream& out, const std::vector<CompatStatsRow>& rows);
void write_stats_table(std::ostream& out, const std::vector<CompatStatsRow>& rows);

// Skills with at least one holder.
std::vector<SkillId> held_skills(const SkillAssignment& skills);

// `count` tasks of `size` distinct skills, sampled uniformly without
// replacement from held skills. Seeded per (seed, size).
std::vector<Task> sample_tasks(const SkillAssignment& skills, std::size_t size, std::size_t count,
                               std::uint64_t seed);

struct ExperimentSpec {
  std::vector<RelationKind> kinds{RelationKind::SPA, RelationKind::SPM, RelationKind::SPO,
                                  RelationKind::SBPH, RelationKind::NNE};
  std::vector<std::size_t> task_sizes{5};
  std::size_t tasks_per_size = 50;
  std::uint64_t seed = 0;
  std::vector<PolicyConfig> policies = default_policies();
  RelationOptions relation;
  unsigned workers = 0;

  // LCMD, LCMC, RFMD, RFMC and the random-user baseline (LCRND).
  static std::vector<PolicyConfig> default_policies();
};

struct TeamExperimentRow {
  RelationKind kind = RelationKind::NNE;
  std::size_t task_size = 0;
  std::string policy;  // "MAX" for the compatible-skills upper bound
  std::size_t tasks = 0;
  std::size_t solved = 0;
  double solution_pct = 0;
  std::optional<double> avg_cost;  // over solved tasks; absent for MAX or none solved
};

// Tasks are drawn once per size and shared by every relation and policy.
// The MAX row counts tasks whose skills are pairwise compatible (cd > 0).
std::vector<TeamExperimentRow> run_team_experiments(const SignedGraph& graph,
                                                    const SkillAssignment& skills,
                                                    const ExperimentSpec& spec);

// Header: kind,k,policy,solution_pct,avg_cost
void write_team_csv(std::ostream& out, const std::vector<TeamExperimentRow>& rows);

struct BaselineRow {
  UnsignedMode mode = UnsignedMode::IgnoreSign;
  RelationKind kind = RelationKind::NNE;
  std::size_t task_size = 0;
  std::size_t teams = 0;       // tasks for which the unsigned greedy returned a team
  std::size_t compatible = 0;  // of those, teams pairwise compatible under `kind`
  double compatible_pct = 0;
};

// Unsigned team formation on both sign-stripped graphs, scored against the
// signed relations built on the original graph.
std::vector<BaselineRow> run_baseline_comparison(const SignedGraph& graph,
                                                 const SkillAssignment& skills,
                                                 const ExperimentSpec& spec);

// Header: mode,kind,k,teams,compatible_pct
void write_baseline_csv(std::ostream& out, const std::vector<BaselineRow>& rows);

// Header: u,v,kind,distance. One row per compatible unordered pair (u < v),
// original labels.
void write_relation_csv(std::ostream& out, const SignedGraph& graph,
                        const CompatibilityRelation& relation);

// Header: members,covered,cost,kind,policy,seed. Members and skills are
// space separated labels / names.
void write_team_row(std::ostream& out, const SignedGraph& graph, const SkillAssignment& skills,
                    const Team& team, RelationKind kind, const PolicyConfig& policy);

}  // namespace signedteams
