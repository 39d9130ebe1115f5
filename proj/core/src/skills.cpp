#include "signedteams/skills.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "text_util.hpp"

namespace signedteams {

SkillAssignment SkillAssignment::from_lists(std::vector<std::vector<SkillId>> per_user,
                                            std::vector<std::string> skill_names) {
  if (skill_names.empty()) throw SkillError("empty skill universe");
  SkillAssignment sa;
  sa.names_ = std::move(skill_names);
  for (SkillId s = 0; s < sa.names_.size(); ++s) {
    if (!sa.index_.emplace(sa.names_[s], s).second) {
      throw SkillError(fmt::format("duplicate skill name '{}'", sa.names_[s]));
    }
  }
  sa.users_with_.assign(sa.names_.size(), {});
  sa.skills_of_ = std::move(per_user);
  for (NodeId u = 0; u < sa.skills_of_.size(); ++u) {
    auto& list = sa.skills_of_[u];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (SkillId s : list) {
      if (s >= sa.names_.size()) throw SkillError(fmt::format("skill id {} out of range", s));
      sa.users_with_[s].push_back(u);
    }
  }
  return sa;
}

bool SkillAssignment::has_skill(NodeId u, SkillId s) const {
  auto list = skills_of(u);
  return std::binary_search(list.begin(), list.end(), s);
}

std::optional<SkillId> SkillAssignment::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SkillAssignment read_skills(std::istream& in, const SignedGraph& graph) {
  std::vector<std::vector<SkillId>> per_user(graph.node_count());
  std::vector<std::string> names;
  std::unordered_map<std::string, SkillId> ids;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    auto user = graph.find(tokens[0]);
    if (!user) {
      throw SkillError(fmt::format("line {}: unknown node '{}'", line_no, tokens[0]));
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      auto [it, inserted] = ids.try_emplace(std::string(tokens[i]), static_cast<SkillId>(names.size()));
      if (inserted) names.emplace_back(tokens[i]);
      per_user[*user].push_back(it->second);
    }
  }
  if (names.empty()) throw SkillError("empty skill universe");
  return SkillAssignment::from_lists(std::move(per_user), std::move(names));
}

SkillAssignment load_skills(const std::filesystem::path& path, const SignedGraph& graph) {
  std::ifstream in(path);
  if (!in) throw SkillError(fmt::format("cannot open skills file '{}'", path.string()));
  try {
    return read_skills(in, graph);
  } catch (const SkillError& e) {
    throw SkillError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void write_skills(std::ostream& out, const SignedGraph& graph, const SkillAssignment& skills) {
  for (NodeId u = 0; u < skills.user_count(); ++u) {
    auto list = skills.skills_of(u);
    if (list.empty()) continue;
    out << graph.label(u);
    for (SkillId s : list) out << ' ' << skills.name(s);
    out << '\n';
  }
}

Task Task::make(std::vector<SkillId> required, const SkillAssignment& skills) {
  if (required.empty()) throw SkillError("task requires at least one skill");
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());
  if (required.back() >= skills.universe_size()) {
    throw SkillError(fmt::format("task skill id {} outside the universe", required.back()));
  }
  Task t;
  t.required_ = std::move(required);
  return t;
}

bool Task::contains(SkillId s) const {
  return std::binary_search(required_.begin(), required_.end(), s);
}

Task parse_task(std::string_view text, const SkillAssignment& skills) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::vector<SkillId> ids;
  for (auto token : detail::tokenize(normalized)) {
    auto id = skills.find(token);
    if (!id) throw SkillError(fmt::format("unknown skill '{}'", token));
    ids.push_back(*id);
  }
  return Task::make(std::move(ids), skills);
}

}  // namespace signedteams
