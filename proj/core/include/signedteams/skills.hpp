#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "signedteams/signed_graph.hpp"

namespace signedteams {

using SkillId = std::uint32_t;

class SkillError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// User -> skills and skill -> users, kept as mutual inverses. Both index
// lists are sorted ascending. Skill ids are dense, assigned in order of
// first appearance; names are kept for output.
class SkillAssignment {
 public:
  SkillAssignment() = default;

  // `per_user[u]` lists skill ids for node u (duplicates dropped). Every id
  // must be below skill_names.size(). Throws SkillError on an empty universe.
  static SkillAssignment from_lists(std::vector<std::vector<SkillId>> per_user,
                                    std::vector<std::string> skill_names);

  std::size_t user_count() const noexcept { return skills_of_.size(); }
  std::size_t universe_size() const noexcept { return names_.size(); }

  std::span<const SkillId> skills_of(NodeId u) const { return skills_of_.at(u); }
  std::span<const NodeId> users_with(SkillId s) const { return users_with_.at(s); }
  bool has_skill(NodeId u, SkillId s) const;

  const std::string& name(SkillId s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<SkillId> find(std::string_view name) const;

 private:
  std::vector<std::vector<SkillId>> skills_of_;
  std::vector<std::vector<NodeId>> users_with_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, SkillId> index_;
};

// Skills file: `u skill...` per line; `#` comments and blank lines ignored.
// `u` must be a label of `graph`. A user listed on several lines gets the
// union. Users not mentioned have no skills.
SkillAssignment read_skills(std::istream& in, const SignedGraph& graph);
SkillAssignment load_skills(const std::filesystem::path& path, const SignedGraph& graph);

void write_skills(std::ostream& out, const SignedGraph& graph, const SkillAssignment& skills);

// A nonempty, sorted, duplicate-free set of required skills.
class Task {
 public:
  // Throws SkillError if `required` is empty or names a skill outside the
  // universe of `skills`.
  static Task make(std::vector<SkillId> required, const SkillAssignment& skills);

  std::span<const SkillId> required() const noexcept { return required_; }
  std::size_t size() const noexcept { return required_.size(); }
  bool contains(SkillId s) const;

 private:
  std::vector<SkillId> required_;
};

// Parses skill names (comma or whitespace separated) against `skills`.
Task parse_task(std::string_view text, const SkillAssignment& skills);

}  // namespace signedteams
