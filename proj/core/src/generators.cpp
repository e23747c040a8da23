#include "pseudoham/generators.hpp"

#include <algorithm>

#include "pseudoham/error.hpp"
#include "pseudoham/rng.hpp"

namespace pseudoham {

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (std::size_t j = 0; j < b; ++j) edges.push_back({u, static_cast<Vertex>(a + j)});
  std::vector<std::uint8_t> sides(a + b, 1);
  std::fill(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(a), 0);
  return Graph(a + b, edges, std::move(sides));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  for (auto& e : edges) e = e.canonical();
  return Graph(10, edges);
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, bool require_connected) {
  if (d >= n || (n * d) % 2 != 0) throw PreconditionError("no simple d-regular graph on n vertices");
  Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t i = 0; i < d; ++i) points.push_back(v);
    shuffle_in_place(rng, std::span<Vertex>(points));
    GraphBuilder b(n);
    bool ok = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      const Vertex u = points[i];
      const Vertex v = points[i + 1];
      if (u == v || !b.add_edge(u, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Graph g = b.build();
    if (require_connected && !is_connected(g)) continue;
    return g;
  }
  throw ResourceLimitError("pairing model did not produce a simple graph");
}

}  // namespace pseudoham
