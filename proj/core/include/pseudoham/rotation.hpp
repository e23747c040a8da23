#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pseudoham/graph.hpp"
#include "pseudoham/hamilton.hpp"
#include "pseudoham/spectral.hpp"

namespace pseudoham {

/// One edge replacement: remove an edge of the current structure and/or add a
/// graph edge. The structure is an edge multiset where a two-vertex cycle
/// counts its edge twice.
struct Replacement {
  std::optional<Edge> removed;
  std::optional<Edge> added;
};

struct RotationTrace {
  Vertex start = 0;  // first vertex of the cycle the run grows from
  std::vector<Replacement> replacements;
  std::vector<Vertex> result;  // Hamilton cycle on success
  std::size_t budget = 0;      // rotations allowed per merge
  std::size_t merges = 0;      // cycles absorbed
  std::size_t rotations = 0;   // rotations performed in the successful attempt
  /// Edge length of the working path right after each merge.
  std::vector<std::size_t> merge_path_lengths;
  std::size_t restarts = 0;
};

struct RotationOutcome {
  bool success = false;
  RotationTrace trace;
  std::string failure;
  std::size_t attempts = 0;
};

/// 50 * ceil(log n / max(log(d / lambda_bar), 0.1)).
std::size_t rotation_budget(std::size_t n, double d, double lambda_bar);

inline constexpr std::size_t kRotationRestarts = 20;

/// Turns the 2-factor f into a Hamilton cycle by absorbing one cycle at a time
/// into a working path and running Posa rotations (fixed start) whenever the
/// path end has no neighbour outside it. When the rotation endpoints are
/// exhausted each endpoint path is reversed and rotated again. Ties go to the
/// smallest vertex on the first attempt; restarts shuffle neighbour orders with
/// seed-derived streams.
RotationOutcome rotate_to_hamilton(const Graph& g, const TwoFactor& f, std::size_t budget, std::uint64_t seed,
                                   std::size_t restarts = kRotationRestarts);
RotationOutcome rotate_to_hamilton(const Graph& g, const TwoFactor& f, const SpectralCertificate& cert,
                                   std::uint64_t seed, std::size_t restarts = kRotationRestarts);

bool is_hamilton_cycle(const Graph& g, const std::vector<Vertex>& cycle);

/// Applies the replacements to f's edge multiset and checks every removed edge
/// was present, every added edge is a graph edge and the final multiset is
/// exactly trace.result, a Hamilton cycle of g.
bool replay_trace(const Graph& g, const TwoFactor& f, const RotationTrace& trace, std::string* why = nullptr);

}  // namespace pseudoham
