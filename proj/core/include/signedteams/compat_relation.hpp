#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "signedteams/signed_graph.hpp"

namespace signedteams {

enum class RelationKind : std::uint8_t { DPE, NNE, SPA, SPM, SPO, SBP, SBPH };

inline constexpr std::array<RelationKind, 7> kAllRelationKinds = {
    RelationKind::DPE, RelationKind::NNE, RelationKind::SPA, RelationKind::SPM,
    RelationKind::SPO, RelationKind::SBP, RelationKind::SBPH};

std::string_view to_string(RelationKind kind);
std::optional<RelationKind> parse_relation_kind(std::string_view text);

class RelationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Symmetric, reflexive compatibility relation with a hop distance for every
// compatible pair. Stored as a dense n x n matrix of one-byte codes: a
// distance, kIncompatible, or kUnknown (exact search gave up on the pair;
// treated as incompatible by every query except unknown()).
class CompatibilityRelation {
 public:
  static constexpr std::uint8_t kIncompatible = 0xFF;
  static constexpr std::uint8_t kUnknown = 0xFE;
  static constexpr std::uint32_t kMaxDistance = 0xFD;

  CompatibilityRelation() = default;
  // Every distinct pair starts incompatible; the diagonal is compatible at 0.
  CompatibilityRelation(RelationKind kind, std::size_t node_count);

  RelationKind kind() const noexcept { return kind_; }
  std::size_t node_count() const noexcept { return n_; }

  bool compatible(NodeId u, NodeId v) const { return code(u, v) <= kMaxDistance; }
  bool unknown(NodeId u, NodeId v) const { return code(u, v) == kUnknown; }
  std::optional<std::uint32_t> distance(NodeId u, NodeId v) const {
    const auto c = code(u, v);
    if (c > kMaxDistance) return std::nullopt;
    return c;
  }
  std::uint8_t code(NodeId u, NodeId v) const { return codes_[index(u, v)]; }
  std::span<const std::uint8_t> row(NodeId u) const {
    return {codes_.data() + static_cast<std::size_t>(u) * n_, n_};
  }

  // Marks (u, v) and (v, u). Throws RelationError for u == v, a zero
  // distance, or a distance above kMaxDistance.
  void set_compatible(NodeId u, NodeId v, std::uint32_t distance);
  void set_unknown(NodeId u, NodeId v);
  void set_incompatible(NodeId u, NodeId v);

  // Unordered distinct pairs.
  std::size_t compatible_pair_count() const;
  std::size_t unknown_pair_count() const;

  bool same_pairs(const CompatibilityRelation& other) const { return codes_ == other.codes_; }

 private:
  std::size_t index(NodeId u, NodeId v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  friend class RelationBuilderAccess;
  RelationKind kind_ = RelationKind::NNE;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> codes_;
};

// Row-level access used by builders that fill one source row at a time and
// symmetrize afterwards.
class RelationBuilderAccess {
 public:
  static std::span<std::uint8_t> mutable_row(CompatibilityRelation& r, NodeId u) {
    return {r.codes_.data() + static_cast<std::size_t>(u) * r.n_, r.n_};
  }
};

}  // namespace signedteams
