#pragma once

#include <cstdint>

#include "pseudoham/graph.hpp"

namespace pseudoham {

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Side X = 0..a-1, side Y = a..a+b-1.
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen_graph();
/// Erdős–Rényi G(n, p).
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);
/// Uniform-ish random d-regular simple graph via the pairing model with
/// restarts; connected when `require_connected` is set.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, bool require_connected = true);

}  // namespace pseudoham
