#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pseudoham {

using Vertex = std::uint32_t;

/// Undirected edge; canonical form has u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge canonical() const { return u < v ? *this : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Minimum, average and maximum degree. The average is kept as the exact
/// rational 2|E| / n alongside its floating value.
struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t degree_sum = 0;  // 2|E|
  std::size_t order = 0;       // n

  double average() const {
    return order == 0 ? 0.0 : static_cast<double>(degree_sum) / static_cast<double>(order);
  }
  bool regular() const { return min_degree == max_degree; }
};

/// Simple undirected graph on vertices 0..n-1 with an optional two-colouring
/// and optional per-vertex labels. Immutable once built; adjacency is kept both
/// as sorted neighbour lists and as packed bit rows.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 20000;

  Graph() = default;

  /// Throws PreconditionError on loops, out-of-range endpoints, duplicate edges,
  /// a bipartition of the wrong length, or an edge inside one side.
  Graph(std::size_t n, std::span<const Edge> edges,
        std::optional<std::vector<std::uint8_t>> bipartition = std::nullopt,
        std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }

  /// All edges in canonical (u < v) lexicographic order.
  std::vector<Edge> edges() const;
  DegreeProfile degree_profile() const;

  bool has_bipartition() const { return bipartition_.has_value(); }
  /// Side of v (0 = X, 1 = Y). Requires has_bipartition().
  std::uint8_t side(Vertex v) const { return (*bipartition_)[v]; }
  const std::optional<std::vector<std::uint8_t>>& bipartition() const { return bipartition_; }
  std::vector<Vertex> side_vertices(std::uint8_t s) const;

  const std::vector<std::string>& labels() const { return labels_; }

  /// Same graph with a replacement bipartition (validated) or labels.
  Graph with_bipartition(std::optional<std::vector<std::uint8_t>> bipartition) const;
  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<std::uint64_t> bits_;
  std::optional<std::vector<std::uint8_t>> bipartition_;
  std::vector<std::string> labels_;
};

/// Incremental construction with duplicate suppression, for builders whose
/// natural enumeration visits each edge more than once.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  /// Returns false if the edge was already present. Throws on loops.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t order() const { return n_; }

  void set_bipartition(std::vector<std::uint8_t> sides) { bipartition_ = std::move(sides); }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  Graph build() const;

 private:
  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::optional<std::vector<std::uint8_t>> bipartition_;
  std::vector<std::string> labels_;
};

// ---- structural queries -------------------------------------------------

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// True iff g has a cycle of length exactly 2k (k >= 2).
bool contains_even_cycle(const Graph& g, std::size_t k);

/// True iff g has a cycle of length exactly `length` (>= 3).
bool contains_cycle_of_length(const Graph& g, std::size_t length);

struct K2sWitness {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> common;  // exactly s common neighbours
};

/// A pair of vertices with at least s common neighbours, i.e. a copy of K_{2,s}.
std::optional<K2sWitness> contains_k2s(const Graph& g, std::size_t s);

/// For every u != v, tallies |N(u) ∩ N(v)|; maps count -> number of such u.
std::map<std::size_t, std::size_t> common_neighbor_histogram(const Graph& g, Vertex v);

std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v);

/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);
bool is_connected(const Graph& g);

/// A proper two-colouring if one exists (component roots coloured 0).
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Graph on n vertices whose edge set is the union of the two edge sets.
Graph edge_union(std::size_t n, std::span<const Edge> a, std::span<const Edge> b);

/// Edges of the path visiting `order` consecutively.
std::vector<Edge> path_edges(std::span<const Vertex> order);

}  // namespace pseudoham
