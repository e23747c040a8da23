#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pseudoham/big_count.hpp"
#include "pseudoham/error.hpp"
#include "pseudoham/graph.hpp"
#include "pseudoham/permanent.hpp"

namespace pseudoham {

/// Vertex-disjoint cycles covering every vertex. A cycle of two vertices is a
/// single edge (the degenerate cycle). Canonical form: each cycle starts at its
/// smallest vertex, longer cycles run towards the smaller of its two
/// neighbours, and cycles are ordered by first vertex.
struct TwoFactor {
  std::vector<std::vector<Vertex>> cycles;

  std::size_t cycle_count() const { return cycles.size(); }
  /// c(F): cycles of length at least 3.
  std::size_t long_cycle_count() const;
  /// Edge multiset; a two-vertex cycle contributes its edge twice.
  std::vector<Edge> edge_multiset() const;
  TwoFactor canonical() const;

  friend bool operator==(const TwoFactor&, const TwoFactor&) = default;
};

/// True iff f is a 2-factor of g (disjoint, covering, every step an edge).
bool is_two_factor(const Graph& g, const TwoFactor& f, std::string* why = nullptr);

inline constexpr std::size_t kMaxTwoFactorOrder = 14;

/// Calls visit once per 2-factor (canonical form), optionally only those with
/// exactly s_filter cycles. Backtracks over permutation supports, building one
/// cycle at a time from the smallest uncovered vertex and keeping a single
/// orientation per cycle. n <= kMaxTwoFactorOrder.
void enumerate_two_factors(const Graph& g, const std::function<void(const TwoFactor&)>& visit,
                           std::optional<std::size_t> s_filter = std::nullopt);
std::vector<TwoFactor> two_factors(const Graph& g, std::optional<std::size_t> s_filter = std::nullopt);

struct OrientedIdentity {
  BigCount permanent;      // per(A)
  BigCount oriented_sum;   // sum over 2-factors of 2^c(F)
  bool equal = false;
};

inline constexpr std::size_t kMaxIdentityOrder = 12;

OrientedIdentity oriented_count_identity(const Graph& g);

struct FactorHistogram {
  /// f(G, s): 2-factors with exactly s cycles, single edges included.
  std::map<std::size_t, BigCount> by_cycles;
  /// 2-factors with exactly c cycles of length >= 3.
  std::map<std::size_t, BigCount> by_long_cycles;
  BigCount total;
  BigCount weighted_by_long;  // sum 2^c(F), equals per(A)
  BigCount weighted_by_all;   // sum f(G,s) 2^s, the other weighting
};

FactorHistogram f_histogram(const Graph& g);

/// A 2-factor read off a perfect matching of the bipartite double cover found
/// with seed-shuffled augmenting paths; nullopt when none exists.
std::optional<TwoFactor> random_two_factor(const Graph& g, std::uint64_t seed);

/// Raised when a counting budget runs out; carries what was done so far.
class CountLimitError : public ResourceLimitError {
 public:
  CountLimitError(const std::string& what, std::string method, std::uint64_t work, BigCount partial)
      : ResourceLimitError(what), method_(std::move(method)), work_(work), partial_(partial) {}
  const std::string& method() const { return method_; }
  std::uint64_t work() const { return work_; }
  BigCount partial() const { return partial_; }

 private:
  std::string method_;
  std::uint64_t work_;
  BigCount partial_;
};

enum class CountMethod { Auto, SubsetDp, BranchAndBound };

struct HamiltonCountOptions {
  CountMethod method = CountMethod::Auto;
  std::size_t max_dp_states = 60'000'000;  // live (subset, end) states per layer
  std::uint64_t max_search_nodes = 20'000'000'000ULL;
};

struct HamiltonCount {
  BigCount cycles;
  std::string method;  // "subset-dp" or "branch-and-bound"
  std::uint64_t work = 0;  // states or search nodes
};

inline constexpr std::size_t kMaxDpOrder = 32;
inline constexpr std::size_t kMaxSearchOrder = 40;

/// Exact number of undirected Hamilton cycles. Auto runs the subset DP for
/// n <= 32 and falls back to branch-and-bound (n <= 40) if the DP outgrows its
/// state budget. Throws CountLimitError when the budgets run out.
HamiltonCount count_hamilton_cycles(const Graph& g, const HamiltonCountOptions& options = {});

struct FormulaGap {
  std::size_t n = 0;
  double average_degree = 0.0;
  double log_h = 0.0;
  double log_formula = 0.0;      // log(n! (d/n)^n)
  double gap_per_vertex = 0.0;   // (log_h - log_formula) / n
  double log_lower_diagnostic = 0.0;  // n log(d/e) + log n! - n log n
  double log_bregman = 0.0;      // equalised Bregman bound on per(A)
  std::optional<double> log_permanent;  // exact per(A) when n is small enough
  ChainReport upper_chain;
  bool below_bregman = false;
  bool below_chain = false;      // log h <= every value of the upper chain
  std::optional<bool> below_permanent;
};

FormulaGap formula_gap(const Graph& g, const BigCount& h);

}  // namespace pseudoham
