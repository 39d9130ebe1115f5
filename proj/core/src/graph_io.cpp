#include "signedteams/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include <fmt/format.h>

#include "text_util.hpp"

namespace signedteams {
namespace {

std::optional<Sign> parse_sign(std::string_view token) {
  if (token == "+1" || token == "1") return Sign::Positive;
  if (token == "-1") return Sign::Negative;
  return std::nullopt;
}

void emit(const GraphLoadOptions& options, std::string_view message) {
  if (options.warn) {
    options.warn(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

}  // namespace

SignedGraph read_graph(std::istream& in, const GraphLoadOptions& options) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, std::size_t> first_line;

  auto intern = [&](std::string_view label) {
    auto [it, inserted] = ids.try_emplace(std::string(label), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw GraphError(fmt::format("line {}: expected `u v sign`, got {} field(s)", line_no,
                                   tokens.size()));
    }
    auto sign = parse_sign(tokens[2]);
    if (!sign) {
      throw GraphError(fmt::format("line {}: invalid sign '{}' (expected +1, -1 or 1)", line_no,
                                   tokens[2]));
    }
    if (tokens[0] == tokens[1]) {
      throw GraphError(fmt::format("line {}: self-loop on node '{}'", line_no, tokens[0]));
    }
    NodeId u = intern(tokens[0]);
    NodeId v = intern(tokens[1]);
    const std::uint64_t key = (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
    auto [it, fresh] = first_line.try_emplace(key, edges.size());
    if (!fresh) {
      const Edge& prev = edges[it->second];
      if (prev.sign != *sign) {
        throw GraphError(fmt::format("line {}: edge ({}, {}) conflicts with an earlier edge of "
                                     "opposite sign",
                                     line_no, tokens[0], tokens[1]));
      }
      emit(options, fmt::format("line {}: duplicate edge ({}, {}) ignored", line_no, tokens[0],
                                tokens[1]));
      continue;
    }
    edges.push_back({u, v, *sign});
  }

  const std::size_t n = labels.size();
  auto graph = SignedGraph::from_edges(n, edges, std::move(labels));
  if (!is_connected(graph)) {
    if (!options.largest_component) {
      throw GraphError("graph is disconnected (use the largest-component option to keep the "
                       "largest connected component)");
    }
    const std::size_t before = graph.node_count();
    graph = largest_component(graph);
    emit(options, fmt::format("kept largest component: {} of {} nodes", graph.node_count(),
                              before));
  }
  return graph;
}

SignedGraph load_graph(const std::filesystem::path& path, const GraphLoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw GraphError(fmt::format("cannot open graph file '{}'", path.string()));
  try {
    return read_graph(in, options);
  } catch (const GraphError& e) {
    throw GraphError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void write_graph(std::ostream& out, const SignedGraph& graph) {
  for (const Edge& e : graph.edges()) {
    out << graph.label(e.u) << ' ' << graph.label(e.v) << ' '
        << (e.sign == Sign::Positive ? "+1" : "-1") << '\n';
  }
}

void save_graph(const std::filesystem::path& path, const SignedGraph& graph) {
  std::ofstream out(path);
  if (!out) throw GraphError(fmt::format("cannot write graph file '{}'", path.string()));
  write_graph(out, graph);
}

}  // namespace signedteams
