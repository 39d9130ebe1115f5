#include "signedteams/sbp.hpp"

#include <algorithm>
#include <stdexcept>

namespace signedteams {
namespace {

// Would appending `y` (with prefix color `y_color`) keep the path balanced?
// The induced subgraph of a path is connected, so its two-coloring is forced
// to node color = sign of the prefix ending there; the only new constraints
// are the chords from y back to earlier path nodes.
template <class OnPath, class ColorOf>
bool extension_balanced(const SignedGraph& graph, NodeId tail, NodeId y, Sign y_color,
                        std::span<const NodeId> path, OnPath on_path, ColorOf color_of) {
  if (graph.degree(y) <= 4 * path.size()) {
    for (const Neighbor& nb : graph.neighbors(y)) {
      if (nb.node == tail || !on_path(nb.node)) continue;
      if (nb.sign != y_color * color_of(nb.node)) return false;
    }
    return true;
  }
  for (NodeId z : path) {
    if (z == tail) continue;
    if (auto s = graph.edge_sign(y, z); s && *s != y_color * color_of(z)) return false;
  }
  return true;
}

BalancedReach make_reach(const SignedGraph& graph, NodeId source, bool record_paths) {
  if (!graph.contains(source)) throw std::out_of_range("source node not in graph");
  BalancedReach r;
  r.source = source;
  r.positive.assign(graph.node_count(), kUnreachable);
  r.negative.assign(graph.node_count(), kUnreachable);
  if (record_paths) {
    r.positive_path.assign(graph.node_count(), {});
    r.negative_path.assign(graph.node_count(), {});
  }
  return r;
}

}  // namespace

BalancedReach sbp_exact_reachability(const SignedGraph& graph, NodeId source,
                                     const ExactSearchOptions& options) {
  if (options.max_path_len < 1) throw std::invalid_argument("path length budget must be >= 1");
  BalancedReach r = make_reach(graph, source, options.record_paths);

  const std::size_t n = graph.node_count();
  std::vector<std::int8_t> color(n, 0);  // 0: not on the current path
  r.positive[source] = 0;
  if (options.record_paths) r.positive_path[source] = {source};

  auto on_path = [&](NodeId z) { return color[z] != 0; };
  auto color_of = [&](NodeId z) { return color[z] > 0 ? Sign::Positive : Sign::Negative; };
  auto settled = [&](NodeId v) {
    return r.positive[v] != kUnreachable && (options.positive_only || r.negative[v] != kUnreachable);
  };

  // Unsigned distance to the nearest unsettled node bounds how soon any
  // extension can still improve an answer.
  std::vector<std::uint32_t> to_open(n);
  std::vector<NodeId> queue;
  auto refresh_bound = [&] {
    std::fill(to_open.begin(), to_open.end(), kUnreachable);
    queue.clear();
    for (NodeId v = 0; v < n; ++v) {
      if (v != source && !settled(v)) {
        to_open[v] = 0;
        queue.push_back(v);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      for (const Neighbor& nb : graph.neighbors(u)) {
        if (to_open[nb.node] == kUnreachable) {
          to_open[nb.node] = to_open[u] + 1;
          queue.push_back(nb.node);
        }
      }
    }
    return !queue.empty();
  };

  std::uint64_t expansions = 0;
  Path path;
  std::vector<std::size_t> cursor;
  for (std::uint32_t limit = 1;; ++limit) {
    if (!refresh_bound()) return r;
    bool deeper = false;  // some extension was cut by `limit`
    bool capped = false;
    path.assign(1, source);
    cursor.assign(1, 0);
    color[source] = 1;
    while (!path.empty()) {
      const NodeId x = path.back();
      auto nbrs = graph.neighbors(x);
      std::size_t& i = cursor.back();
      if (i == nbrs.size()) {
        color[x] = 0;
        path.pop_back();
        cursor.pop_back();
        continue;
      }
      const Neighbor nb = nbrs[i++];
      const NodeId y = nb.node;
      if (on_path(y) || to_open[y] == kUnreachable) continue;
      const auto len = static_cast<std::uint32_t>(path.size());
      if (len + to_open[y] > limit) {
        deeper = true;
        continue;
      }
      const Sign y_color = color_of(x) * nb.sign;
      if (!extension_balanced(graph, x, y, y_color, path, on_path, color_of)) continue;
      if (options.max_expansions != 0 && ++expansions > options.max_expansions) {
        capped = true;
        break;
      }

      path.push_back(y);
      auto& best = y_color == Sign::Positive ? r.positive : r.negative;
      if (len < best[y]) {
        best[y] = len;
        if (options.record_paths) {
          (y_color == Sign::Positive ? r.positive_path : r.negative_path)[y] = path;
        }
      }
      color[y] = static_cast<std::int8_t>(to_int(y_color));
      cursor.push_back(0);
    }
    for (NodeId v : path) color[v] = 0;

    if (capped) {
      r.truncated = true;
      return r;
    }
    // No simple path is longer than n - 1 edges.
    if (!deeper || limit + 1 >= n) return r;
    if (limit >= options.max_path_len) {
      r.truncated = refresh_bound();
      return r;
    }
  }
}

BalancedReach sbp_heuristic_counts(const SignedGraph& graph, NodeId source, bool record_paths) {
  BalancedReach r = make_reach(graph, source, record_paths);
  const std::size_t n = graph.node_count();

  // State id = node * 2 + (end sign negative ? 1 : 0).
  auto state = [](NodeId v, Sign s) {
    return static_cast<std::size_t>(v) * 2 + (s == Sign::Negative ? 1 : 0);
  };
  std::vector<std::size_t> parent(2 * n, SIZE_MAX);
  std::vector<std::size_t> queue;
  queue.push_back(state(source, Sign::Positive));
  r.positive[source] = 0;

  std::vector<std::size_t> stamp(n, SIZE_MAX);
  std::vector<Sign> color(n, Sign::Positive);
  Path path;

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t st = queue[head];
    const NodeId x = static_cast<NodeId>(st / 2);
    const Sign x_sign = (st & 1) ? Sign::Negative : Sign::Positive;
    const std::uint32_t len = (x_sign == Sign::Positive ? r.positive : r.negative)[x];

    // Materialize the representative path and mark its node colors.
    path.clear();
    for (std::size_t cur = st; cur != SIZE_MAX; cur = parent[cur]) {
      const auto v = static_cast<NodeId>(cur / 2);
      path.push_back(v);
      stamp[v] = head;
      color[v] = (cur & 1) ? Sign::Negative : Sign::Positive;
    }
    std::reverse(path.begin(), path.end());

    auto on_path = [&](NodeId z) { return stamp[z] == head; };
    auto color_of = [&](NodeId z) { return color[z]; };

    for (const Neighbor& nb : graph.neighbors(x)) {
      const NodeId y = nb.node;
      const Sign y_sign = x_sign * nb.sign;
      auto& best = y_sign == Sign::Positive ? r.positive : r.negative;
      if (best[y] != kUnreachable || on_path(y)) continue;
      if (!extension_balanced(graph, x, y, y_sign, path, on_path, color_of)) continue;
      best[y] = len + 1;
      parent[state(y, y_sign)] = st;
      queue.push_back(state(y, y_sign));
    }
  }

  if (record_paths) {
    for (NodeId v = 0; v < n; ++v) {
      for (Sign s : {Sign::Positive, Sign::Negative}) {
        auto& out = (s == Sign::Positive ? r.positive_path : r.negative_path)[v];
        if ((s == Sign::Positive ? r.positive : r.negative)[v] == kUnreachable) continue;
        for (std::size_t cur = state(v, s); cur != SIZE_MAX; cur = parent[cur]) {
          out.push_back(static_cast<NodeId>(cur / 2));
        }
        std::reverse(out.begin(), out.end());
      }
    }
  }
  return r;
}

}  // namespace signedteams
