#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pseudoham/graph.hpp"

namespace pseudoham {

// Edge-list format (ASCII, LF-terminated, 0-indexed):
//
//   n m [bipartite k]
//   u v        (m lines)
//
// The optional header tail "bipartite k" says vertices 0..k-1 form side X and
// the rest side Y. Labels and non-prefix bipartitions live in a JSON sidecar
// {"labels": {"<v>": "<label>"}, "bipartition": [0, 1, ...]}.

Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

/// Writes the canonical form: sorted edges with u < v. The "bipartite k"
/// header is emitted when the bipartition is a prefix split.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

/// True when g carries data the edge list cannot express (labels, or a
/// bipartition that is not a 0..k-1 prefix).
bool needs_sidecar(const Graph& g);

std::string sidecar_json(const Graph& g);
void write_sidecar(const Graph& g, const std::filesystem::path& path);

/// Returns g with labels/bipartition taken from the sidecar document.
Graph apply_sidecar(const Graph& g, const std::string& json_text);

/// Reads `path`, plus `<path>.json` when that file exists.
Graph load_graph(const std::filesystem::path& path);
/// Writes `path` and, when needs_sidecar(g), `<path>.json`.
void save_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace pseudoham
