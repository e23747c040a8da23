#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pseudoham/graph.hpp"
#include "pseudoham/max_clique.hpp"

namespace pseudoham {

/// The graph G whose appearance in a union of two Hamilton paths is tracked:
/// an even cycle C_{2k} or K_{2,s}.
struct TargetGraph {
  enum class Kind { EvenCycle, K2s };
  Kind kind = Kind::EvenCycle;
  std::size_t parameter = 3;  // k for C_{2k}, s for K_{2,s}

  std::string name() const;  // "C6", "K2,3", ...
  friend bool operator==(const TargetGraph&, const TargetGraph&) = default;
};

TargetGraph even_cycle_target(std::size_t k);
TargetGraph k2s_target(std::size_t s);
/// "c4", "c6", "c8", "c10", "c2k:K", "k23", "k24", "k2s:S". Throws PreconditionError.
TargetGraph parse_target(const std::string& text);
bool contains_target(const Graph& g, const TargetGraph& target);

struct DerivationStep {
  std::string description;
  double log_value = 0.0;
};

struct BoundReport {
  std::string target;
  std::size_t n = 0;
  std::string direction;  // "upper" or "lower"
  double log_value = 0.0;
  std::vector<DerivationStep> derivation;
  // Inputs the value is recomputed from.
  double h_log = 0.0;
  std::string h_source;
};

/// log H_n(G) <= log(n!/2) - h_log, where h_log bounds from below the log of
/// the number of Hamilton paths in the G-free graph (its Hamilton cycle count
/// is used directly). Throws PreconditionError if free_graph contains G or
/// h_log is negative or not finite.
BoundReport upper_bound_from_free_graph(const Graph& free_graph, const TargetGraph& target, double h_log,
                                        const std::string& h_source = "supplied");

/// Recomputes log_value from the stored inputs.
double replay_bound(const BoundReport& report);

struct ExponentRow {
  std::string target;
  std::string symbolic;            // exponent e in n^{e n}
  double exponent = 0.0;
  std::string base_symbolic;       // extra factor b^{n}, empty when absent
  std::optional<double> base_factor;
  bool conditional = false;        // relies on an unproven eigenvalue conjecture
  std::string note;
};

/// Reference exponents of the asymptotic upper bounds. For an even cycle
/// target (k >= 2) the general 1 - 2/(3k) row, the sharper rows for C6, C8 and
/// C10 where they exist, and the conditional 1 - 1/(2k - 2 - floor(2k/4) + 1);
/// for K_{2,3} and K_{2,4} the n^{n/2} rows with 2^{-1/2} and 3^{-1/2}.
std::vector<ExponentRow> theorem_exponent_table(const TargetGraph& target);

using Permutation = std::vector<std::uint32_t>;  // a permutation of 0..m-1

struct HamiltonPathFamily {
  std::size_t n = 0;
  std::vector<std::vector<Vertex>> paths;
  TargetGraph creating_target;
};

/// sigma(i) = tau(i+1) or tau(i) = sigma(i+1) for some i.
bool permutations_collide(const Permutation& sigma, const Permutation& tau);

/// P_sigma = a_1 x_{sigma(1)} b_1 y_{sigma(1)} ... a_m x_{sigma(m)} b_m y_{sigma(m)}
/// with a_i, b_i, x_i, y_i at 4(i-1) + 0, 1, 2, 3. Throws PreconditionError
/// on non-permutations or mixed lengths.
HamiltonPathFamily build_k23_family(const std::vector<Permutation>& sigma_family);

struct FamilyVerdict {
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
};

/// Checks that the union of every pair of paths contains the target.
FamilyVerdict verify_creating_family(const HamiltonPathFamily& family);

inline constexpr std::size_t kMaxBruteForceHn = 6;
/// Per-search node cap. The hardest case, C4 at n = 6, needs about 8e7 nodes in
/// its largest sub-search.
inline constexpr std::uint64_t kDefaultHnNodes = 1'000'000'000;

struct HnResult {
  std::size_t n = 0;
  TargetGraph target;
  std::size_t paths = 0;           // n!/2
  std::size_t creating = 0;        // H_n(G)
  std::size_t avoiding = 0;        // H_n(G) bar
  bool creating_optimal = false;
  bool avoiding_optimal = false;
  std::vector<std::vector<Vertex>> creating_family;
  std::vector<std::vector<Vertex>> avoiding_family;
  bool product_holds = false;      // creating * avoiding <= n!/2
};

/// Undirected Hamilton paths of K_n (each listed once, first vertex smaller
/// than last), in lexicographic order. n >= 2.
std::vector<std::vector<Vertex>> hamilton_paths_of_complete(std::size_t n);

/// Exact H_n(G) and its avoiding counterpart by maximum clique search on the
/// pairwise "union contains G" relation. 2 <= n <= kMaxBruteForceHn.
HnResult brute_force_hn(std::size_t n, const TargetGraph& target, std::uint64_t node_budget = kDefaultHnNodes);

inline constexpr std::size_t kMaxCollidingM = 7;

struct CollidingFamily {
  std::size_t m = 0;
  std::vector<Permutation> family;
  bool proven_optimal = false;
  std::uint64_t nodes = 0;
  double golden_reference = 0.0;  // ((1 + sqrt 5)/2)^m
};

/// Largest pairwise colliding set of permutations of [m], m <= kMaxCollidingM.
CollidingFamily colliding_family_search(std::size_t m, std::uint64_t node_budget = kDefaultCliqueNodes);

/// log H_{4m}(K_{2,3}) >= log |family| for a verified family.
BoundReport lower_bound_from_family(const HamiltonPathFamily& family, const FamilyVerdict& verdict);

}  // namespace pseudoham
