#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "signedteams/oracle.hpp"
#include "signedteams/relation.hpp"
#include "signedteams/synthetic.hpp"

namespace st = signedteams;
namespace oracle = signedteams::oracle;
using st::RelationKind;
using st::testing::id;
using st::testing::labeled_graph;

TEST(ShortestPaths, ParallelRoutes) {
  auto g = labeled_graph({{"q", "a", +1}, {"a", "v", +1}, {"q", "b", +1}, {"b", "v", -1}});
  auto paths = oracle::enumerate_shortest_paths(g, id(g, "q"), id(g, "v"));
  ASSERT_EQ(paths.size(), 2u);
  std::vector<int> signs;
  for (const auto& p : paths) signs.push_back(oracle::product_sign(g, p));
  std::sort(signs.begin(), signs.end());
  EXPECT_EQ(signs, (std::vector<int>{-1, 1}));
}

TEST(ShortestPaths, PathGraphHasOne) {
  auto g = labeled_graph({{"a", "b", +1}, {"b", "c", -1}, {"c", "d", +1}});
  auto paths = oracle::enumerate_shortest_paths(g, 0, 3);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], (oracle::NodeList{0, 1, 2, 3}));
  EXPECT_EQ(oracle::product_sign(g, paths[0]), -1);
}

TEST(ShortestPaths, TriangleFixtureOnlyPath) {
  auto g = st::testing::triangle_fixture();
  auto paths = oracle::enumerate_shortest_paths(g, id(g, "u"), id(g, "v"));
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], st::testing::path_of(g, {"u", "x1", "v"}));
}

TEST(ShortestPaths, UnreachableAndSelf) {
  auto g = st::SignedGraph::from_edges(3, std::vector<st::Edge>{{0, 1, st::Sign::Positive}});
  EXPECT_TRUE(oracle::enumerate_shortest_paths(g, 0, 2).empty());
  auto self = oracle::enumerate_shortest_paths(g, 1, 1);
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0], oracle::NodeList{1});
}

TEST(Budget, RefusesLargeInputs) {
  auto g = st::random_connected_signed_graph(13, 20, 0.2, 1);
  EXPECT_THROW(oracle::enumerate_shortest_paths(g, 0, 1), oracle::BudgetExceeded);
  EXPECT_THROW(oracle::oracle_relation(g, RelationKind::SPA), oracle::BudgetExceeded);
  auto small = st::testing::triangle_fixture();
  EXPECT_THROW(oracle::enumerate_simple_paths(small, 0, 20), oracle::BudgetExceeded);
  EXPECT_THROW(oracle::oracle_relation(small, RelationKind::SBPH), std::invalid_argument);

  auto skills = st::testing::random_skills(small.node_count(), 5, 1);
  auto r = st::build_relation(small, RelationKind::NNE);
  auto task = st::Task::make({0, 1, 2, 3, 4}, skills);
  EXPECT_THROW(oracle::oracle_min_cost_team(small, r, skills, task), oracle::BudgetExceeded);
}

TEST(Labeling, TriangleSignPatterns) {
  for (int mask = 0; mask < 8; ++mask) {
    auto sign = [&](int bit) { return (mask >> bit) & 1 ? -1 : +1; };
    auto g = labeled_graph({{"a", "b", sign(0)}, {"b", "c", sign(1)}, {"c", "a", sign(2)}});
    const int negatives = __builtin_popcount(static_cast<unsigned>(mask));
    EXPECT_EQ(oracle::balanced_by_labeling(g, {0, 1, 2}), negatives % 2 == 0) << mask;
  }
}

TEST(OracleRelation, CompletePositiveGraph) {
  auto g = st::testing::complete_positive(5);
  for (auto k : st::kAllRelationKinds) {
    if (k == RelationKind::SBPH) continue;
    EXPECT_EQ(oracle::oracle_relation(g, k).compatible_pair_count(), 10u) << to_string(k);
  }
}

TEST(OracleRelation, IndependentOfNodeOrder) {
  for (const auto& e : st::testing::connected_ensemble(25, 44, 9)) {
    const auto n = e.graph.node_count();
    std::vector<st::NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    std::vector<st::Edge> edges;
    for (const auto& ed : e.graph.edges()) edges.push_back({perm[ed.u], perm[ed.v], ed.sign});
    auto h = st::SignedGraph::from_edges(n, edges);
    for (auto k : {RelationKind::SPM, RelationKind::SBP}) {
      auto a = oracle::oracle_relation(e.graph, k);
      auto b = oracle::oracle_relation(h, k);
      for (st::NodeId u = 0; u < n; ++u) {
        for (st::NodeId v = 0; v < n; ++v) ASSERT_EQ(a.code(u, v), b.code(perm[u], perm[v]));
      }
    }
  }
}

TEST(OracleTeam, SingletonAndInfeasible) {
  auto g = labeled_graph({{"u", "v", -1}, {"v", "w", +1}});
  std::vector<std::vector<st::SkillId>> per_user{{0, 1}, {2}, {}};
  auto skills = st::SkillAssignment::from_lists(per_user, {"a", "b", "c"});
  auto r = st::build_relation(g, RelationKind::SPO);
  auto single = oracle::oracle_min_cost_team(g, r, skills, st::Task::make({0, 1}, skills));
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->members, std::vector<st::NodeId>{0});
  EXPECT_EQ(single->cost, 0u);
  EXPECT_FALSE(oracle::oracle_min_cost_team(g, r, skills, st::Task::make({0, 2}, skills)));
}

TEST(OracleTeam, PrefersCheaperCover) {
  // b is held by a neighbor of the a-holder and by a node three hops away.
  auto g = labeled_graph({{"p", "q", +1}, {"p", "m1", +1}, {"m1", "m2", +1}, {"m2", "r", +1}});
  std::vector<std::vector<st::SkillId>> per_user(g.node_count());
  per_user[id(g, "p")] = {0};
  per_user[id(g, "q")] = {1};
  per_user[id(g, "r")] = {1};
  auto skills = st::SkillAssignment::from_lists(per_user, {"a", "b"});
  auto r = st::build_relation(g, RelationKind::SPA);
  auto best = oracle::oracle_min_cost_team(g, r, skills, st::Task::make({0, 1}, skills));
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->cost, 1u);
  EXPECT_EQ(best->members, (std::vector<st::NodeId>{id(g, "p"), id(g, "q")}));
}
