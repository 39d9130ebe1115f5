#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "signedteams/compat_relation.hpp"
#include "signedteams/rng.hpp"
#include "signedteams/signed_graph.hpp"
#include "signedteams/skills.hpp"

namespace signedteams {

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class SkillPolicy : std::uint8_t { RarestFirst, LeastCompatibleFirst };
enum class UserPolicy : std::uint8_t { MinDistance, MostCompatible, Random };
// How MinDistance scores a candidate against the current team: the
// resulting team cost (max) or the total distance (sum).
enum class DistanceAggregate : std::uint8_t { Max, Sum };

struct PolicyConfig {
  SkillPolicy skill_policy = SkillPolicy::LeastCompatibleFirst;
  UserPolicy user_policy = UserPolicy::MinDistance;
  std::optional<std::uint64_t> seed;  // required by UserPolicy::Random
  DistanceAggregate aggregate = DistanceAggregate::Max;
  unsigned workers = 1;
};

// Short name: skill part (LC / RF) + user part (MD / MC / RND), e.g. LCMD.
std::string policy_name(const PolicyConfig& config);
std::optional<PolicyConfig> parse_policy_name(std::string_view name);

struct Team {
  std::vector<NodeId> members;   // sorted
  std::vector<SkillId> covered;  // task skills covered, sorted
  std::uint32_t cost = 0;

  friend bool operator==(const Team&, const Team&) = default;
};

enum class TeamFailure : std::uint8_t { None, MissingSkill, NoCompatibleCompletion };

struct TeamResult {
  std::optional<Team> team;
  TeamFailure failure = TeamFailure::None;
  std::optional<SkillId> missing_skill;

  explicit operator bool() const noexcept { return team.has_value(); }
};

// Max pairwise distance; 0 for fewer than two members. Throws
// ContractViolation if some pair is not compatible.
std::uint32_t team_cost(const CompatibilityRelation& relation, std::span<const NodeId> members);

bool team_compatible(const CompatibilityRelation& relation, std::span<const NodeId> members);

// Throws ContractViolation unless the team covers the task, is pairwise
// compatible, and its cost and covered set are consistent.
void verify_team(const CompatibilityRelation& relation, const SkillAssignment& skills,
                 const Task& task, const Team& team);

// Fewest holders (RarestFirst) or smallest cd(s) (LeastCompatibleFirst);
// ties go to the lower skill id. `uncovered` must be nonempty.
SkillId select_skill(std::span<const SkillId> uncovered, const SkillAssignment& skills,
                     std::span<const std::uint64_t> compat_degrees, SkillPolicy policy);

struct UserSelection {
  UserPolicy policy = UserPolicy::MinDistance;
  DistanceAggregate aggregate = DistanceAggregate::Max;
  // Users holding task skills that stay uncovered after this pick.
  std::span<const NodeId> remaining_holders;
  Rng* rng = nullptr;
};

// Keeps the candidates compatible with every team member and picks one by
// policy (ties: lowest id). nullopt when no candidate survives the filter.
std::optional<NodeId> select_user(std::span<const NodeId> candidates,
                                  std::span<const NodeId> team,
                                  const CompatibilityRelation& relation,
                                  const UserSelection& selection);

// Greedy team formation. For every holder of the first selected skill, grow
// a team by repeatedly choosing an uncovered skill and a compatible holder
// of it; a candidate that stalls is dropped. Returns the cheapest completed
// candidate (ties: lexicographically smallest member list).
class TeamFormer {
 public:
  TeamFormer(const CompatibilityRelation& relation, const SkillAssignment& skills);

  TeamResult form(const Task& task, const PolicyConfig& config) const;

  std::span<const std::uint64_t> compat_degrees() const noexcept { return compat_degrees_; }

 private:
  std::optional<Team> grow(NodeId first, const Task& task, const PolicyConfig& config,
                           Rng* rng) const;

  const CompatibilityRelation* relation_;
  const SkillAssignment* skills_;
  std::vector<std::uint64_t> compat_degrees_;
};

TeamResult form_team(const SignedGraph& graph, const CompatibilityRelation& relation,
                     const SkillAssignment& skills, const Task& task, const PolicyConfig& config);

enum class UnsignedMode : std::uint8_t { IgnoreSign, DeleteNegative };

std::string_view to_string(UnsignedMode mode);

// IgnoreSign relabels every edge positive; DeleteNegative drops negative
// edges (the result may be disconnected).
SignedGraph unsigned_transform(const SignedGraph& graph, UnsignedMode mode);

// Rarest-skill-first greedy on an unsigned graph, ignoring compatibility:
// for each holder of the rarest skill, add the nearest holder of every other
// skill; keep the candidate with the smallest hop diameter (Team::cost).
TeamResult rarest_first_unsigned(const SignedGraph& graph, const SkillAssignment& skills,
                                 const Task& task);

}  // namespace signedteams
