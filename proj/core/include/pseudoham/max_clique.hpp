#pragma once

#include <cstdint>
#include <vector>

#include "pseudoham/graph.hpp"

namespace pseudoham {

struct CliqueResult {
  std::vector<Vertex> vertices;  // ascending
  bool proven_optimal = false;   // false when the node budget ran out
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultCliqueNodes = 50'000'000;

/// Maximum clique by branch-and-bound with greedy colouring bounds over bitset
/// candidate sets; vertices are renumbered by non-increasing degree. Ties
/// resolve deterministically. Without a proof of optimality the result is the
/// largest clique found. With `exceed` set only cliques of more than `exceed`
/// vertices are looked for: an empty result then means none exists (when
/// proven_optimal) or none was found.
CliqueResult max_clique(const Graph& g, std::uint64_t node_budget = kDefaultCliqueNodes, std::size_t exceed = 0);

}  // namespace pseudoham
