#include "pseudoham/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

#include "pseudoham/error.hpp"

namespace pseudoham {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void validate_bipartition(std::size_t n, const std::optional<std::vector<std::uint8_t>>& sides,
                          std::span<const Edge> edges) {
  if (!sides) return;
  if (sides->size() != n) throw PreconditionError("bipartition length does not match vertex count");
  for (auto s : *sides)
    if (s > 1) throw PreconditionError("bipartition sides must be 0 or 1");
  for (const auto& e : edges)
    if ((*sides)[e.u] == (*sides)[e.v])
      throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " lies inside one side of the bipartition");
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges,
             std::optional<std::vector<std::uint8_t>> bipartition, std::vector<std::string> labels)
    : n_(n),
      m_(edges.size()),
      words_((n + 63) / 64),
      bipartition_(std::move(bipartition)),
      labels_(std::move(labels)) {
  if (n > kMaxVertices)
    throw PreconditionError("graph has " + std::to_string(n) + " vertices; cap is " +
                            std::to_string(kMaxVertices));
  if (!labels_.empty() && labels_.size() != n)
    throw PreconditionError("label count does not match vertex count");
  bits_.assign(n_ * words_, 0);
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges) {
    if (e.u >= n_ || e.v >= n_)
      throw PreconditionError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                              std::to_string(e.v));
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    auto& w = bits_[e.u * words_ + (e.v >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (e.v & 63);
    if (w & mask)
      throw PreconditionError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    w |= mask;
    bits_[e.v * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
    ++deg[e.u];
    ++deg[e.v];
  }
  validate_bipartition(n_, bipartition_, edges);
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges) {
    adj_[fill[e.u]++] = e.v;
    adj_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n_; ++v)
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

DegreeProfile Graph::degree_profile() const {
  DegreeProfile p;
  p.order = n_;
  p.degree_sum = 2 * m_;
  if (n_ == 0) return p;
  p.min_degree = kUnreached;
  for (Vertex v = 0; v < n_; ++v) {
    p.min_degree = std::min(p.min_degree, degree(v));
    p.max_degree = std::max(p.max_degree, degree(v));
  }
  return p;
}

std::vector<Vertex> Graph::side_vertices(std::uint8_t s) const {
  if (!bipartition_) throw PreconditionError("graph has no recorded bipartition");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if ((*bipartition_)[v] == s) out.push_back(v);
  return out;
}

Graph Graph::with_bipartition(std::optional<std::vector<std::uint8_t>> bipartition) const {
  const auto e = edges();
  return Graph(n_, e, std::move(bipartition), labels_);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  const auto e = edges();
  return Graph(n_, e, bipartition_, std::move(labels));
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.bits_ == b.bits_ && a.bipartition_ == b.bipartition_;
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), adj_(n) {
  if (n > Graph::kMaxVertices)
    throw PreconditionError("graph has " + std::to_string(n) + " vertices; cap is " +
                            std::to_string(Graph::kMaxVertices));
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return false;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  return true;
}

Graph GraphBuilder::build() const {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) edges.push_back({u, v});
  std::sort(edges.begin(), edges.end());
  return Graph(n_, edges, bipartition_, labels_);
}

// ---- structural queries -------------------------------------------------

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  const auto no_parent = static_cast<Vertex>(n);
  std::size_t best = kUnreached;
  std::vector<std::size_t> dist(n, kUnreached);
  std::vector<Vertex> parent(n, no_parent);
  std::vector<Vertex> touched;
  std::queue<Vertex> q;
  for (Vertex root = 0; root < n; ++root) {
    for (Vertex v : touched) dist[v] = kUnreached;
    touched.clear();
    while (!q.empty()) q.pop();
    dist[root] = 0;
    parent[root] = no_parent;
    touched.push_back(root);
    q.push(root);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      // Non-tree edges seen from u close walks of length >= 2*dist[u].
      if (best != kUnreached && 2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          q.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnreached) return std::nullopt;
  return best;
}

namespace {

struct CycleSearch {
  const Graph& g;
  std::size_t length;
  Vertex start = 0;
  std::vector<std::size_t> dist;  // distance to start within vertices >= start
  std::vector<char> on_path;

  bool extend(Vertex cur, std::size_t edges_used) {
    if (edges_used == length - 1) return g.adjacent(cur, start);
    const std::size_t remaining = length - edges_used;
    for (Vertex w : g.neighbors(cur)) {
      if (w <= start || on_path[w]) continue;
      if (dist[w] == kUnreached || dist[w] > remaining - 1) continue;
      on_path[w] = 1;
      const bool found = extend(w, edges_used + 1);
      on_path[w] = 0;
      if (found) return true;
    }
    return false;
  }
};

}  // namespace

bool contains_cycle_of_length(const Graph& g, std::size_t length) {
  if (length < 3) throw PreconditionError("cycle length must be at least 3");
  const std::size_t n = g.order();
  if (length > n) return false;
  CycleSearch s{g, length, 0, std::vector<std::size_t>(n), std::vector<char>(n, 0)};
  std::queue<Vertex> q;
  for (Vertex start = 0; start + length <= n; ++start) {
    // start is the smallest vertex on the cycle; distances within vertices >= start.
    std::fill(s.dist.begin(), s.dist.end(), kUnreached);
    s.dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      if (s.dist[u] >= length / 2 + 1) continue;
      for (Vertex w : g.neighbors(u))
        if (w >= start && s.dist[w] == kUnreached) {
          s.dist[w] = s.dist[u] + 1;
          q.push(w);
        }
    }
    s.start = start;
    s.on_path[start] = 1;
    const bool found = s.extend(start, 0);
    s.on_path[start] = 0;
    if (found) return true;
  }
  return false;
}

bool contains_even_cycle(const Graph& g, std::size_t k) {
  if (k < 2) throw PreconditionError("contains_even_cycle requires k >= 2");
  return contains_cycle_of_length(g, 2 * k);
}

std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
  const auto a = g.row(u);
  const auto b = g.row(v);
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::optional<K2sWitness> contains_k2s(const Graph& g, std::size_t s) {
  if (s == 0) throw PreconditionError("contains_k2s requires s >= 1");
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) < s) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(v) < s || common_neighbor_count(g, u, v) < s) continue;
      K2sWitness w{u, v, {}};
      for (Vertex x : g.neighbors(u)) {
        if (g.adjacent(v, x)) w.common.push_back(x);
        if (w.common.size() == s) break;
      }
      return w;
    }
  }
  return std::nullopt;
}

std::map<std::size_t, std::size_t> common_neighbor_histogram(const Graph& g, Vertex v) {
  if (v >= g.order()) throw PreconditionError("vertex out of range");
  std::map<std::size_t, std::size_t> hist;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) ++hist[common_neighbor_count(g, u, v)];
  return hist;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == kUnreached; });
}

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> color(n, 2);
  std::queue<Vertex> q;
  for (Vertex r = 0; r < n; ++r) {
    if (color[r] != 2) continue;
    color[r] = 0;
    q.push(r);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == 2) {
          color[w] = static_cast<std::uint8_t>(1 - color[u]);
          q.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw PreconditionError("vertex out of range");
    if (index[vertices[i]] >= 0) throw PreconditionError("repeated vertex in induced subgraph");
    index[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (index[w] > static_cast<std::int64_t>(i))
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(index[w])});
  std::optional<std::vector<std::uint8_t>> sides;
  if (g.has_bipartition()) {
    sides.emplace();
    for (Vertex v : vertices) sides->push_back(g.side(v));
  }
  return Graph(vertices.size(), edges, std::move(sides));
}

Graph edge_union(std::size_t n, std::span<const Edge> a, std::span<const Edge> b) {
  GraphBuilder builder(n);
  for (const auto& e : a) builder.add_edge(e.u, e.v);
  for (const auto& e : b) builder.add_edge(e.u, e.v);
  return builder.build();
}

std::vector<Edge> path_edges(std::span<const Vertex> order) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) out.push_back(Edge{order[i], order[i + 1]}.canonical());
  return out;
}

}  // namespace pseudoham
