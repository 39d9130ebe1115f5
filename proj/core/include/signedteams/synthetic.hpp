#pragma once

#include <cstdint>

#include "signedteams/rng.hpp"
#include "signedteams/signed_graph.hpp"
#include "signedteams/skills.hpp"

namespace signedteams {

struct ZipfSkillOptions {
  std::size_t users = 0;
  std::size_t skills = 1;
  double exponent = 1.0;             // > 0
  double mean_skills_per_user = 3.0; // >= 1; counts are 1 + Geometric
  std::uint64_t seed = 0;
};

// Skill of rank r (0-based) is drawn with weight (r + 1)^-exponent; every
// user gets a geometric number of distinct skills drawn that way, so skill
// occurrences land on users uniformly at random. Skill names are "s<rank>".
// Deterministic for a fixed seed.
SkillAssignment generate_zipf_skills(const ZipfSkillOptions& options);

// Random spanning tree plus uniformly random extra edges up to `edges`
// total; each edge is negative with probability negative_fraction.
SignedGraph random_connected_signed_graph(std::size_t nodes, std::size_t edges,
                                          double negative_fraction, std::uint64_t seed);

// Erdos-Renyi G(n, p) with independent signs. Not necessarily connected.
SignedGraph random_gnp_signed_graph(std::size_t nodes, double edge_probability,
                                    double negative_fraction, Rng& rng);

}  // namespace signedteams
