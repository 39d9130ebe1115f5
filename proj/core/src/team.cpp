#include "signedteams/team.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include <fmt/format.h>

#include "signedteams/parallel.hpp"
#include "signedteams/relation.hpp"

namespace signedteams {

std::string policy_name(const PolicyConfig& config) {
  std::string name = config.skill_policy == SkillPolicy::RarestFirst ? "RF" : "LC";
  switch (config.user_policy) {
    case UserPolicy::MinDistance: name += "MD"; break;
    case UserPolicy::MostCompatible: name += "MC"; break;
    case UserPolicy::Random: name += "RND"; break;
  }
  if (config.user_policy == UserPolicy::MinDistance && config.aggregate == DistanceAggregate::Sum) {
    name += "SUM";
  }
  return name;
}

std::optional<PolicyConfig> parse_policy_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "RANDOM") upper = "LCRND";
  PolicyConfig config;
  if (upper.starts_with("LC")) {
    config.skill_policy = SkillPolicy::LeastCompatibleFirst;
  } else if (upper.starts_with("RF")) {
    config.skill_policy = SkillPolicy::RarestFirst;
  } else {
    return std::nullopt;
  }
  const std::string rest = upper.substr(2);
  if (rest == "MD") {
    config.user_policy = UserPolicy::MinDistance;
  } else if (rest == "MDSUM") {
    config.user_policy = UserPolicy::MinDistance;
    config.aggregate = DistanceAggregate::Sum;
  } else if (rest == "MC") {
    config.user_policy = UserPolicy::MostCompatible;
  } else if (rest == "RND") {
    config.user_policy = UserPolicy::Random;
  } else {
    return std::nullopt;
  }
  return config;
}

bool team_compatible(const CompatibilityRelation& relation, std::span<const NodeId> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!relation.compatible(members[i], members[j])) return false;
    }
  }
  return true;
}

std::uint32_t team_cost(const CompatibilityRelation& relation, std::span<const NodeId> members) {
  std::uint32_t cost = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      auto d = relation.distance(members[i], members[j]);
      if (!d) {
        throw ContractViolation(fmt::format("team members {} and {} are not compatible",
                                            members[i], members[j]));
      }
      cost = std::max(cost, *d);
    }
  }
  return cost;
}

void verify_team(const CompatibilityRelation& relation, const SkillAssignment& skills,
                 const Task& task, const Team& team) {
  if (team.members.empty()) throw ContractViolation("empty team");
  if (!std::is_sorted(team.members.begin(), team.members.end()) ||
      std::adjacent_find(team.members.begin(), team.members.end()) != team.members.end()) {
    throw ContractViolation("team members must be sorted and distinct");
  }
  std::vector<SkillId> covered;
  for (NodeId u : team.members) {
    for (SkillId s : skills.skills_of(u)) {
      if (task.contains(s)) covered.push_back(s);
    }
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  if (!std::equal(covered.begin(), covered.end(), task.required().begin(), task.required().end())) {
    throw ContractViolation("team does not cover the task");
  }
  if (covered != team.covered) throw ContractViolation("covered skill set is inconsistent");
  if (team_cost(relation, team.members) != team.cost) {
    throw ContractViolation("reported cost differs from the max pairwise distance");
  }
}

SkillId select_skill(std::span<const SkillId> uncovered, const SkillAssignment& skills,
                     std::span<const std::uint64_t> compat_degrees, SkillPolicy policy) {
  if (uncovered.empty()) throw ContractViolation("no uncovered skill to select");
  auto score = [&](SkillId s) -> std::uint64_t {
    return policy == SkillPolicy::RarestFirst ? skills.users_with(s).size() : compat_degrees[s];
  };
  SkillId best = uncovered.front();
  for (SkillId s : uncovered) {
    const auto a = score(s);
    const auto b = score(best);
    if (a < b || (a == b && s < best)) best = s;
  }
  return best;
}

std::optional<NodeId> select_user(std::span<const NodeId> candidates,
                                  std::span<const NodeId> team,
                                  const CompatibilityRelation& relation,
                                  const UserSelection& selection) {
  std::vector<NodeId> eligible;
  for (NodeId c : candidates) {
    if (std::all_of(team.begin(), team.end(), [&](NodeId m) { return relation.compatible(c, m); })) {
      eligible.push_back(c);
    }
  }
  if (eligible.empty()) return std::nullopt;
  std::sort(eligible.begin(), eligible.end());

  switch (selection.policy) {
    case UserPolicy::MinDistance: {
      std::optional<NodeId> best;
      std::uint64_t best_score = std::numeric_limits<std::uint64_t>::max();
      for (NodeId c : eligible) {
        std::uint64_t score = 0;
        for (NodeId m : team) {
          const std::uint64_t d = *relation.distance(c, m);
          score = selection.aggregate == DistanceAggregate::Max ? std::max(score, d) : score + d;
        }
        if (score < best_score) {
          best_score = score;
          best = c;
        }
      }
      return best;
    }
    case UserPolicy::MostCompatible: {
      std::optional<NodeId> best;
      std::size_t best_count = 0;
      for (NodeId c : eligible) {
        std::size_t count = 0;
        for (NodeId h : selection.remaining_holders) count += relation.compatible(c, h);
        if (!best || count > best_count) {
          best_count = count;
          best = c;
        }
      }
      return best;
    }
    case UserPolicy::Random: {
      if (selection.rng == nullptr) throw ContractViolation("random user policy needs a generator");
      std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
      return eligible[pick(*selection.rng)];
    }
  }
  return std::nullopt;
}

TeamFormer::TeamFormer(const CompatibilityRelation& relation, const SkillAssignment& skills)
    : relation_(&relation),
      skills_(&skills),
      compat_degrees_(skill_compat_degrees(relation, skills)) {}

std::optional<Team> TeamFormer::grow(NodeId first, const Task& task, const PolicyConfig& config,
                                     Rng* rng) const {
  std::vector<NodeId> members{first};
  std::vector<SkillId> uncovered;
  for (SkillId s : task.required()) {
    if (!skills_->has_skill(first, s)) uncovered.push_back(s);
  }

  std::vector<NodeId> remaining;
  while (!uncovered.empty()) {
    const SkillId target = select_skill(uncovered, *skills_, compat_degrees_, config.skill_policy);

    UserSelection selection;
    selection.policy = config.user_policy;
    selection.aggregate = config.aggregate;
    selection.rng = rng;
    if (config.user_policy == UserPolicy::MostCompatible) {
      remaining.clear();
      for (SkillId s : uncovered) {
        if (s == target) continue;
        auto holders = skills_->users_with(s);
        remaining.insert(remaining.end(), holders.begin(), holders.end());
      }
      std::sort(remaining.begin(), remaining.end());
      remaining.erase(std::unique(remaining.begin(), remaining.end()), remaining.end());
      selection.remaining_holders = remaining;
    }

    auto pick = select_user(skills_->users_with(target), members, *relation_, selection);
    if (!pick) return std::nullopt;
    members.push_back(*pick);
    std::erase_if(uncovered, [&](SkillId s) { return skills_->has_skill(*pick, s); });
  }

  Team team;
  std::sort(members.begin(), members.end());
  team.members = std::move(members);
  team.covered.assign(task.required().begin(), task.required().end());
  team.cost = team_cost(*relation_, team.members);
  return team;
}

TeamResult TeamFormer::form(const Task& task, const PolicyConfig& config) const {
  TeamResult result;
  for (SkillId s : task.required()) {
    if (skills_->users_with(s).empty()) {
      result.failure = TeamFailure::MissingSkill;
      result.missing_skill = s;
      return result;
    }
  }
  if (config.user_policy == UserPolicy::Random && !config.seed) {
    throw ContractViolation("random user policy requires a seed");
  }

  const SkillId first = select_skill(task.required(), *skills_, compat_degrees_, config.skill_policy);
  auto holders = skills_->users_with(first);

  std::vector<std::optional<Team>> candidates(holders.size());
  parallel_for(holders.size(), config.workers, [&](std::size_t i, unsigned) {
    std::optional<Rng> rng;
    if (config.seed) rng = make_rng(*config.seed, {holders[i]});
    candidates[i] = grow(holders[i], task, config, rng ? &*rng : nullptr);
  });

  const Team* best = nullptr;
  for (const auto& c : candidates) {
    if (!c) continue;
    if (best == nullptr || c->cost < best->cost ||
        (c->cost == best->cost && c->members < best->members)) {
      best = &*c;
    }
  }
  if (best == nullptr) {
    result.failure = TeamFailure::NoCompatibleCompletion;
    return result;
  }
  result.team = *best;
  verify_team(*relation_, *skills_, task, *result.team);
  return result;
}

TeamResult form_team(const SignedGraph& graph, const CompatibilityRelation& relation,
                     const SkillAssignment& skills, const Task& task, const PolicyConfig& config) {
  if (relation.node_count() != graph.node_count() || skills.user_count() != graph.node_count()) {
    throw ContractViolation("graph, relation and skills must cover the same nodes");
  }
  return TeamFormer(relation, skills).form(task, config);
}

}  // namespace signedteams
