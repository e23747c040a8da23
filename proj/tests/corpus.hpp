#pragma once

// Small graphs shared by the unit tests and the acceptance checks.

#include <algorithm>
#include <string>
#include <vector>

#include "pseudoham/constructions.hpp"
#include "pseudoham/generators.hpp"
#include "pseudoham/graph.hpp"

namespace corpus {

using pseudoham::Graph;

struct Named {
  std::string name;
  Graph graph;
};

/// Every graph here has at most 9 vertices.
inline std::vector<Named> small_graphs() {
  using namespace pseudoham;
  std::vector<Named> out;
  for (std::size_t n = 3; n <= 9; ++n) {
    out.push_back({"K" + std::to_string(n), complete_graph(n)});
    out.push_back({"C" + std::to_string(n), cycle_graph(n)});
    out.push_back({"P" + std::to_string(n), path_graph(n)});
  }
  out.push_back({"K2,2", complete_bipartite(2, 2)});
  out.push_back({"K3,3", complete_bipartite(3, 3)});
  out.push_back({"K3,4", complete_bipartite(3, 4)});
  out.push_back({"K4,4", complete_bipartite(4, 4)});
  out.push_back({"K4,5", complete_bipartite(4, 5)});
  for (std::uint64_t seed = 0; seed < 6; ++seed)
    out.push_back({"3-regular-8-" + std::to_string(seed), random_regular(8, 3, seed)});
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 4 + seed % 6;
    const double p = 0.35 + 0.1 * double(seed % 5);
    out.push_back({"gnp-" + std::to_string(n) + "-" + std::to_string(seed), random_gnp(n, p, seed)});
  }
  // induced pieces of the constructions: BFS balls of 9 vertices
  const Graph sources[] = {build_generalized_quadrangle(2).graph, build_furedi(2, 5).graph, petersen_graph()};
  for (std::size_t s = 0; s < 3; ++s) {
    std::vector<Vertex> ball = {0};
    for (std::size_t i = 0; i < ball.size() && ball.size() < 9; ++i)
      for (Vertex w : sources[s].neighbors(ball[i]))
        if (ball.size() < 9 && std::find(ball.begin(), ball.end(), w) == ball.end()) ball.push_back(w);
    out.push_back({"ball-" + std::to_string(s), induced_subgraph(sources[s], ball)});
  }
  return out;
}

/// Graphs with at most 12 vertices for the permanent/2-factor identity.
inline std::vector<Named> identity_graphs() {
  using namespace pseudoham;
  std::vector<Named> out = {{"C4", cycle_graph(4)},   {"C5", cycle_graph(5)},
                            {"C6", cycle_graph(6)},   {"K4", complete_graph(4)},
                            {"K3,3", complete_bipartite(3, 3)}, {"Petersen", petersen_graph()}};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 4 + seed % 9;
    out.push_back({"gnp-" + std::to_string(n) + "-" + std::to_string(seed),
                   random_gnp(n, 0.3 + 0.05 * double(seed % 8), 1000 + seed)});
  }
  return out;
}

}  // namespace corpus
