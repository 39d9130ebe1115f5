#pragma once

#include <cstdint>
#include <vector>

#include "signedteams/compat_relation.hpp"
#include "signedteams/path_counts.hpp"
#include "signedteams/signed_graph.hpp"
#include "signedteams/skills.hpp"

namespace signedteams {

struct RelationOptions {
  // Exact SBP path-length budget; 0 means graph diameter + 2.
  std::uint32_t sbp_max_path_len = 0;
  // Exact SBP is refused on graphs with more nodes than this.
  std::size_t sbp_max_nodes = 2000;
  // Per-source cap on exact SBP path extensions; 0 means unlimited.
  std::uint64_t sbp_max_expansions = 0;
  // The dense relation matrix is refused above this many nodes.
  std::size_t max_dense_nodes = 20000;
  // 0 means one per hardware thread.
  unsigned workers = 0;
};

// Shortest-path membership rule for SPA / SPM / SPO given the signed counts
// of shortest u-v paths. Requires at least one positive shortest path in all
// three cases, so unreachable pairs are never compatible.
bool sp_compatible(RelationKind kind, PathCount pos, PathCount neg);

// Builds the relation over all node pairs. Distances:
//   DPE 1; SPA/SPM/SPO and NNE the unsigned hop distance;
//   SBP/SBPH the length of the shortest balanced positive path found.
// The heuristic relation is symmetrized: a pair is compatible if the search
// from either endpoint finds a path, at the shorter of the two lengths.
CompatibilityRelation build_relation(const SignedGraph& graph, RelationKind kind,
                                     const RelationOptions& options = {});

// cd(s): ordered compatible user pairs (u, v), u holding s, counted once per
// skill s' != s held by v. A user paired with itself counts.
std::vector<std::uint64_t> skill_compat_degrees(const CompatibilityRelation& relation,
                                                const SkillAssignment& skills);
std::uint64_t skill_compat_degree(const CompatibilityRelation& relation,
                                  const SkillAssignment& skills, SkillId s);

// Symmetric bit matrix over skills: bit (a, b) set iff cd(a, b) > 0.
class SkillPairMatrix {
 public:
  SkillPairMatrix() = default;
  explicit SkillPairMatrix(std::size_t skill_count)
      : n_(skill_count), words_((skill_count + 63) / 64), bits_(n_ * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(SkillId a, SkillId b) const {
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1u;
  }
  void set(SkillId a, SkillId b) { bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }
  std::span<std::uint64_t> row(SkillId a) { return {bits_.data() + a * words_, words_}; }
  std::span<const std::uint64_t> row(SkillId a) const { return {bits_.data() + a * words_, words_}; }
  void merge(const SkillPairMatrix& other);

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

SkillPairMatrix compatible_skill_pairs(const CompatibilityRelation& relation,
                                       const SkillAssignment& skills);

}  // namespace signedteams
