// signedteams: compatibility statistics and team formation on signed networks.
//
//   signedteams stats      --graph G [--skills S] [--relation SPA,SPM,...] [--out stats.csv]
//   signedteams relation   --graph G --relation SPA --out pairs.csv
//   signedteams team       --graph G --skills S --relation SPA --task a,b,c [--policy LCMD]
//   signedteams experiment --graph G --skills S --seed N [--sizes 3,5,10] [--out teams.csv]
//   signedteams baseline   --graph G --skills S --seed N [--sizes 5] [--out baseline.csv]
//   signedteams generate   (--graph G | --users N) --skill-count K --seed N --out skills.txt
//
// Exit status: 0 on success, 2 when `team` finds no team, 1 on any error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "signedteams/experiments.hpp"
#include "signedteams/graph_io.hpp"
#include "signedteams/relation.hpp"
#include "signedteams/rng.hpp"
#include "signedteams/skills.hpp"
#include "signedteams/synthetic.hpp"
#include "signedteams/team.hpp"

namespace st = signedteams;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoTeam = 2;

struct CommonArgs {
  std::string graph;
  std::string skills;
  std::vector<std::string> relations;
  std::optional<std::uint64_t> seed;
  std::string out;
  unsigned threads = 0;
  bool largest_component = false;
  std::uint32_t sbp_budget = 0;
  std::size_t sbp_max_nodes = 2000;
  std::uint64_t sbp_max_expansions = 0;
  std::size_t max_dense_nodes = 20000;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool graph_required = true) {
  auto* g = cmd->add_option("--graph", a.graph, "Signed edge list (`u v sign` per line)");
  if (graph_required) g->required();
  cmd->add_option("--skills", a.skills, "Skills file (`u skill...` per line)");
  cmd->add_option("--relation", a.relations, "Relation kind(s): DPE NNE SPA SPM SPO SBP SBPH")
      ->delimiter(',');
  cmd->add_option("--seed", a.seed, "Seed for all randomness");
  cmd->add_option("--out", a.out, "Output file (default: stdout)");
  cmd->add_option("--threads", a.threads, "Worker threads (0: all cores)");
  cmd->add_flag("--largest-component", a.largest_component,
                "Keep the largest connected component of a disconnected graph");
  cmd->add_option("--sbp-budget", a.sbp_budget, "Exact SBP path-length budget (0: diameter + 2)");
  cmd->add_option("--sbp-max-nodes", a.sbp_max_nodes, "Refuse exact SBP above this many nodes");
  cmd->add_option("--sbp-max-expansions", a.sbp_max_expansions,
                  "Per-source cap on exact SBP path extensions (0: none)");
  cmd->add_option("--max-dense-nodes", a.max_dense_nodes,
                  "Refuse to materialize a relation above this many nodes");
}

st::RelationOptions relation_options(const CommonArgs& a) {
  st::RelationOptions o;
  o.sbp_max_path_len = a.sbp_budget;
  o.sbp_max_nodes = a.sbp_max_nodes;
  o.sbp_max_expansions = a.sbp_max_expansions;
  o.max_dense_nodes = a.max_dense_nodes;
  o.workers = a.threads;
  return o;
}

std::vector<st::RelationKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<st::RelationKind> kinds;
  for (const auto& name : names) {
    auto k = st::parse_relation_kind(name);
    if (!k) throw std::invalid_argument(fmt::format("unknown relation kind '{}'", name));
    kinds.push_back(*k);
  }
  return kinds;
}

st::SignedGraph load(const CommonArgs& a) {
  st::GraphLoadOptions o;
  o.largest_component = a.largest_component;
  return st::load_graph(a.graph, o);
}

// Writes to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error(fmt::format("cannot write '{}'", path));
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::uint64_t require_seed(const CommonArgs& a, std::string_view command) {
  if (!a.seed) throw std::invalid_argument(fmt::format("`{}` requires --seed", command));
  return *a.seed;
}

int run_stats(const CommonArgs& a) {
  const auto graph = load(a);
  std::optional<st::SkillAssignment> skills;
  if (!a.skills.empty()) skills = st::load_skills(a.skills, graph);

  st::StatsOptions options;
  options.relation = relation_options(a);
  options.workers = a.threads;
  if (!a.relations.empty()) {
    options.kinds = parse_kinds(a.relations);
  } else if (graph.node_count() > a.sbp_max_nodes) {
    std::erase(options.kinds, st::RelationKind::SBP);
    std::cerr << "note: exact SBP skipped (graph larger than --sbp-max-nodes)\n";
  }

  const auto summary = st::summarize(graph, skills ? &*skills : nullptr);
  fmt::print("users {}  edges {}  negative {} ({}%)  diameter {}  skills {}\n", summary.users,
             summary.edges, summary.negative_edges, summary.negative_pct_label(),
             summary.diameter, summary.skills);

  const auto rows = st::run_compat_stats(graph, skills ? &*skills : nullptr, options);
  st::write_stats_table(std::cout, rows);
  if (!a.out.empty()) {
    Output out(a.out);
    st::write_stats_csv(out.stream(), rows);
  }
  return kExitOk;
}

int run_relation(const CommonArgs& a) {
  const auto graph = load(a);
  const auto kinds = parse_kinds(a.relations);
  if (kinds.size() != 1) throw std::invalid_argument("`relation` takes exactly one --relation");
  const auto relation = st::build_relation(graph, kinds.front(), relation_options(a));
  Output out(a.out);
  st::write_relation_csv(out.stream(), graph, relation);
  return kExitOk;
}

int run_team(const CommonArgs& a, const std::string& task_text, const std::string& policy_text) {
  if (a.skills.empty()) throw std::invalid_argument("`team` requires --skills");
  const auto graph = load(a);
  const auto skills = st::load_skills(a.skills, graph);
  const auto kinds = parse_kinds(a.relations.empty() ? std::vector<std::string>{"SPA"} : a.relations);
  if (kinds.size() != 1) throw std::invalid_argument("`team` takes exactly one --relation");
  auto policy = st::parse_policy_name(policy_text);
  if (!policy) throw std::invalid_argument(fmt::format("unknown policy '{}'", policy_text));
  policy->seed = a.seed;
  policy->workers = a.threads;
  const auto task = st::parse_task(task_text, skills);

  const auto relation = st::build_relation(graph, kinds.front(), relation_options(a));
  const auto result = st::form_team(graph, relation, skills, task, *policy);
  if (!result.team) {
    if (result.failure == st::TeamFailure::MissingSkill) {
      std::cerr << "no team: no user holds skill '" << skills.name(*result.missing_skill) << "'\n";
    } else {
      std::cerr << "no team: no mutually compatible completion found\n";
    }
    return kExitNoTeam;
  }
  Output out(a.out);
  out.stream() << "members,covered,cost,kind,policy,seed\n";
  st::write_team_row(out.stream(), graph, skills, *result.team, kinds.front(), *policy);
  return kExitOk;
}

struct ExperimentArgs {
  std::vector<std::size_t> sizes;
  std::size_t tasks_per_size = 50;
  std::vector<std::string> policies;
  std::size_t zipf_skills = 0;
  double zipf_exponent = 1.0;
};

st::ExperimentSpec make_spec(const CommonArgs& a, const ExperimentArgs& e, std::string_view command) {
  st::ExperimentSpec spec;
  spec.seed = require_seed(a, command);
  if (!a.relations.empty()) spec.kinds = parse_kinds(a.relations);
  if (!e.sizes.empty()) spec.task_sizes = e.sizes;
  spec.tasks_per_size = e.tasks_per_size;
  if (!e.policies.empty()) {
    spec.policies.clear();
    for (const auto& name : e.policies) {
      auto p = st::parse_policy_name(name);
      if (!p) throw std::invalid_argument(fmt::format("unknown policy '{}'", name));
      spec.policies.push_back(*p);
    }
  }
  spec.relation = relation_options(a);
  spec.workers = a.threads;
  return spec;
}

st::SkillAssignment experiment_skills(const CommonArgs& a, const ExperimentArgs& e,
                                      const st::SignedGraph& graph, std::uint64_t seed) {
  if (!a.skills.empty()) return st::load_skills(a.skills, graph);
  if (e.zipf_skills == 0) throw std::invalid_argument("need --skills or --zipf-skills");
  st::ZipfSkillOptions z;
  z.users = graph.node_count();
  z.skills = e.zipf_skills;
  z.exponent = e.zipf_exponent;
  z.seed = st::derive_seed(seed, {0x5c111u});
  return st::generate_zipf_skills(z);
}

int run_experiment(const CommonArgs& a, const ExperimentArgs& e) {
  const auto spec = make_spec(a, e, "experiment");
  const auto graph = load(a);
  const auto skills = experiment_skills(a, e, graph, spec.seed);
  const auto rows = st::run_team_experiments(graph, skills, spec);
  Output out(a.out);
  st::write_team_csv(out.stream(), rows);
  return kExitOk;
}

int run_baseline(const CommonArgs& a, const ExperimentArgs& e) {
  const auto spec = make_spec(a, e, "baseline");
  const auto graph = load(a);
  const auto skills = experiment_skills(a, e, graph, spec.seed);
  const auto rows = st::run_baseline_comparison(graph, skills, spec);
  Output out(a.out);
  st::write_baseline_csv(out.stream(), rows);
  return kExitOk;
}

struct GenerateArgs {
  std::size_t users = 0;
  std::size_t skill_count = 500;
  double exponent = 1.0;
  double mean_per_user = 3.0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double negative_fraction = 0.2;
  std::string graph_out;
};

int run_generate(const CommonArgs& a, const GenerateArgs& g) {
  const std::uint64_t seed = require_seed(a, "generate");
  std::optional<st::SignedGraph> graph;
  if (!g.graph_out.empty()) {
    if (g.nodes == 0) throw std::invalid_argument("--graph-out needs --nodes and --edges");
    graph = st::random_connected_signed_graph(g.nodes, g.edges, g.negative_fraction,
                                              st::derive_seed(seed, {1}));
    st::save_graph(g.graph_out, *graph);
  } else if (!a.graph.empty()) {
    graph = load(a);
  }
  if (a.out.empty() && !g.graph_out.empty()) return kExitOk;

  st::ZipfSkillOptions z;
  z.users = graph ? graph->node_count() : g.users;
  if (z.users == 0) throw std::invalid_argument("need --graph, --graph-out or --users");
  z.skills = g.skill_count;
  z.exponent = g.exponent;
  z.mean_skills_per_user = g.mean_per_user;
  z.seed = st::derive_seed(seed, {2});
  const auto skills = st::generate_zipf_skills(z);
  const auto labels = graph ? *graph : st::SignedGraph::from_edges(z.users, {});
  Output out(a.out);
  st::write_skills(out.stream(), labels, skills);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatibility relations and team formation on signed networks"};
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);

  CommonArgs stats_args, relation_args, team_args, exp_args, base_args, gen_args;
  ExperimentArgs exp_extra, base_extra;
  GenerateArgs gen_extra;
  std::string task_text;
  std::string policy_text = "LCMD";

  auto* stats = app.add_subcommand("stats", "Compatible-pair statistics per relation");
  add_common(stats, stats_args);

  auto* relation = app.add_subcommand("relation", "Export one relation as u,v,kind,distance rows");
  add_common(relation, relation_args);

  auto* team = app.add_subcommand("team", "Form one team for a task");
  add_common(team, team_args);
  team->add_option("--task", task_text, "Required skills, comma separated")->required();
  team->add_option("--policy", policy_text, "LCMD, LCMC, RFMD, RFMC, LCRND, RFRND, LCMDSUM, ...");

  auto add_experiment = [](CLI::App* cmd, ExperimentArgs& e) {
    cmd->add_option("--sizes", e.sizes, "Task sizes")->delimiter(',');
    cmd->add_option("--tasks-per-size", e.tasks_per_size, "Random tasks per size");
    cmd->add_option("--policies", e.policies, "Policy names")->delimiter(',');
    cmd->add_option("--zipf-skills", e.zipf_skills, "Generate this many Zipf skills instead of --skills");
    cmd->add_option("--zipf-exponent", e.zipf_exponent, "Zipf exponent for --zipf-skills");
  };
  auto* experiment = app.add_subcommand("experiment", "Team formation over random tasks");
  add_common(experiment, exp_args);
  add_experiment(experiment, exp_extra);

  auto* baseline = app.add_subcommand("baseline", "Unsigned team formation scored for compatibility");
  add_common(baseline, base_args);
  add_experiment(baseline, base_extra);

  auto* generate = app.add_subcommand("generate", "Synthetic Zipf skills (and optionally a graph)");
  add_common(generate, gen_args, false);
  generate->add_option("--users", gen_extra.users, "Number of users when no graph is given");
  generate->add_option("--skill-count", gen_extra.skill_count, "Distinct skills");
  generate->add_option("--exponent", gen_extra.exponent, "Zipf exponent (> 0)");
  generate->add_option("--mean-per-user", gen_extra.mean_per_user, "Mean skills per user (>= 1)");
  generate->add_option("--nodes", gen_extra.nodes, "Random graph: node count");
  generate->add_option("--edges", gen_extra.edges, "Random graph: edge count");
  generate->add_option("--negative-fraction", gen_extra.negative_fraction, "Random graph: P(edge negative)");
  generate->add_option("--graph-out", gen_extra.graph_out, "Write a random connected graph here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (stats->parsed()) return run_stats(stats_args);
    if (relation->parsed()) return run_relation(relation_args);
    if (team->parsed()) return run_team(team_args, task_text, policy_text);
    if (experiment->parsed()) return run_experiment(exp_args, exp_extra);
    if (baseline->parsed()) return run_baseline(base_args, base_extra);
    if (generate->parsed()) return run_generate(gen_args, gen_extra);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
