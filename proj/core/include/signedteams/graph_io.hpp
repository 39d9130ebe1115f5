#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string_view>

#include "signedteams/signed_graph.hpp"

namespace signedteams {

struct GraphLoadOptions {
  // Keep only the largest connected component instead of rejecting a
  // disconnected input.
  bool largest_component = false;
  // Receives non-fatal diagnostics (merged duplicates, dropped nodes).
  // Defaults to stderr when empty.
  std::function<void(std::string_view)> warn;
};

// Edge list: one `u v sign` per line, whitespace separated. Signs are
// `+1`, `-1` or `1`. `#` starts a comment; blank lines are skipped. Node
// labels are arbitrary tokens and are re-indexed densely in order of first
// appearance.
SignedGraph read_graph(std::istream& in, const GraphLoadOptions& options = {});
SignedGraph load_graph(const std::filesystem::path& path, const GraphLoadOptions& options = {});

// Writes `u v sign` lines using the original labels, canonical edge order.
void write_graph(std::ostream& out, const SignedGraph& graph);
void save_graph(const std::filesystem::path& path, const SignedGraph& graph);

}  // namespace signedteams
