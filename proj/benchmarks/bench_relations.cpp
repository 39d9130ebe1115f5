#include <benchmark/benchmark.h>

#include "signedteams/relation.hpp"
#include "signedteams/synthetic.hpp"
#include "signedteams/team.hpp"

namespace st = signedteams;

namespace {

void BM_BuildRelation(benchmark::State& state) {
  const auto kind = static_cast<st::RelationKind>(state.range(0));
  const auto g = st::random_connected_signed_graph(2000, 8000, 0.25, 3);
  st::RelationOptions o;
  o.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(st::build_relation(g, kind, o).compatible_pair_count());
  }
  state.SetLabel(std::string(st::to_string(kind)));
}
BENCHMARK(BM_BuildRelation)
    ->Arg(static_cast<int>(st::RelationKind::SPA))
    ->Arg(static_cast<int>(st::RelationKind::SPO))
    ->Arg(static_cast<int>(st::RelationKind::NNE))
    ->Arg(static_cast<int>(st::RelationKind::SBPH))
    ->Unit(benchmark::kMillisecond);

void BM_FormTeam(benchmark::State& state) {
  const auto g = st::random_connected_signed_graph(2000, 8000, 0.25, 5);
  st::ZipfSkillOptions z;
  z.users = g.node_count();
  z.skills = 200;
  z.seed = 5;
  const auto skills = st::generate_zipf_skills(z);
  st::RelationOptions ro;
  ro.workers = 1;
  const auto r = st::build_relation(g, st::RelationKind::SPO, ro);
  const auto task = st::Task::make({0, 1, 2, 3, 4, 5}, skills);
  st::PolicyConfig p;
  p.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(st::form_team(g, r, skills, task, p).team.has_value());
  }
}
BENCHMARK(BM_FormTeam)->Unit(benchmark::kMillisecond);

}  // namespace
