#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pseudoham/constructions.hpp"
#include "pseudoham/error.hpp"
#include "pseudoham/generators.hpp"
#include "pseudoham/hamilton.hpp"
#include "pseudoham/permanent.hpp"

using namespace pseudoham;

namespace {

// Distinct 2-factors read off the permutations supported on the adjacency.
std::set<std::vector<Edge>> factor_oracle(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::set<std::vector<Edge>> out;
  do {
    bool ok = true;
    for (Vertex i = 0; ok && i < n; ++i) ok = g.adjacent(i, p[i]);
    if (!ok) continue;
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i) es.push_back(Edge{i, p[i]}.canonical());
    std::sort(es.begin(), es.end());
    out.insert(es);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST(TwoFactors, CycleOfFour) {
  const auto fs = two_factors(cycle_graph(4));
  EXPECT_EQ(fs.size(), 3u);
  std::size_t matchings = 0;
  for (const auto& f : fs) {
    EXPECT_TRUE(is_two_factor(cycle_graph(4), f));
    matchings += f.cycle_count() == 2;
  }
  EXPECT_EQ(matchings, 2u);
}

TEST(TwoFactors, CompleteFour) {
  const auto h = f_histogram(complete_graph(4));
  EXPECT_EQ(h.total, BigCount(6));
  EXPECT_EQ(h.by_cycles.at(1), BigCount(3));
  EXPECT_EQ(h.by_cycles.at(2), BigCount(3));
  EXPECT_EQ(two_factors(complete_graph(4), 2).size(), 3u);
}

TEST(TwoFactors, TreesAndEmptyGraphs) {
  EXPECT_TRUE(two_factors(path_graph(5)).empty());
  EXPECT_TRUE(two_factors(complete_bipartite(1, 3)).empty());
  // single edges count as cycles, so a tree with a perfect matching has one
  const auto p6 = two_factors(path_graph(6));
  ASSERT_EQ(p6.size(), 1u);
  EXPECT_EQ(p6[0].long_cycle_count(), 0u);
  EXPECT_EQ(permanent_exact(BinaryMatrix::adjacency(path_graph(6))), BigCount(1));
  const auto h = f_histogram(Graph(5, std::vector<Edge>{}));
  EXPECT_TRUE(h.by_cycles.empty());
  EXPECT_EQ(h.total, BigCount(0));
}

TEST(TwoFactors, SixCycleHistogram) {
  const auto h = f_histogram(cycle_graph(6));
  EXPECT_EQ(h.by_cycles.at(1), BigCount(1));
  EXPECT_EQ(h.by_cycles.at(3), BigCount(2));
  EXPECT_EQ(h.total, BigCount(3));
  EXPECT_EQ(h.weighted_by_long, BigCount(4));
  EXPECT_EQ(h.weighted_by_all, BigCount(2 + 8 + 8));
}

TEST(TwoFactors, MatchPermutationOracle) {
  for (const auto& [name, g] : corpus::small_graphs()) {
    if (g.order() > 8) continue;
    const auto ref = factor_oracle(g);
    std::set<std::vector<Edge>> ours;
    enumerate_two_factors(g, [&](const TwoFactor& f) {
      EXPECT_TRUE(is_two_factor(g, f)) << name;
      EXPECT_EQ(f, f.canonical()) << name;
      auto es = f.edge_multiset();
      for (auto& e : es) e = e.canonical();
      std::sort(es.begin(), es.end());
      EXPECT_TRUE(ours.insert(es).second) << name << ": duplicate";
    });
    EXPECT_EQ(ours, ref) << name;
  }
}

TEST(TwoFactors, RejectsNonFactors) {
  const Graph c6 = cycle_graph(6);
  std::string why;
  EXPECT_FALSE(is_two_factor(c6, TwoFactor{{{0, 1, 2}, {3, 4, 5}}}, &why));
  EXPECT_FALSE(why.empty());
  EXPECT_FALSE(is_two_factor(c6, TwoFactor{{{0, 1, 2, 3, 4}}}));
  EXPECT_TRUE(is_two_factor(c6, TwoFactor{{{0, 1}, {2, 3}, {4, 5}}}));
  EXPECT_THROW(two_factors(Graph(kMaxTwoFactorOrder + 1, std::vector<Edge>{})), ResourceLimitError);
}

TEST(Identity, SmallExamples) {
  auto c4 = oriented_count_identity(cycle_graph(4));
  EXPECT_EQ(c4.permanent, BigCount(4));
  EXPECT_EQ(c4.oriented_sum, BigCount(4));
  EXPECT_TRUE(c4.equal);
  auto c5 = oriented_count_identity(cycle_graph(5));
  EXPECT_EQ(c5.permanent, BigCount(2));
  EXPECT_TRUE(c5.equal);
  EXPECT_TRUE(oriented_count_identity(complete_graph(4)).equal);
}

TEST(Identity, HoldsOnCorpus) {
  for (const auto& [name, g] : corpus::identity_graphs()) {
    const auto id = oriented_count_identity(g);
    EXPECT_TRUE(id.equal) << name;
    EXPECT_EQ(id.permanent, permanent_exact(BinaryMatrix::adjacency(g))) << name;
    EXPECT_EQ(f_histogram(g).weighted_by_long, id.permanent) << name;
  }
}

TEST(RandomTwoFactor, IsAFactorAndDeterministic) {
  const Graph g = build_generalized_quadrangle(2).graph;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = random_two_factor(g, seed);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(is_two_factor(g, *f));
    EXPECT_EQ(*f, *random_two_factor(g, seed));
  }
  EXPECT_FALSE(random_two_factor(path_graph(5), 1).has_value());
}

TEST(Counting, CompleteGraphs) {
  for (unsigned n = 3; n <= 10; ++n) {
    BigCount expected = factorial(n - 1);
    const auto want = n == 3 ? BigCount(1) : BigCount(expected.to_u64() / 2);
    HamiltonCountOptions dp;
    dp.method = CountMethod::SubsetDp;
    HamiltonCountOptions bb;
    bb.method = CountMethod::BranchAndBound;
    EXPECT_EQ(count_hamilton_cycles(complete_graph(n), dp).cycles, want) << n;
    EXPECT_EQ(count_hamilton_cycles(complete_graph(n), bb).cycles, want) << n;
  }
  EXPECT_EQ(count_hamilton_cycles(complete_graph(5)).cycles, BigCount(12));
  EXPECT_EQ(count_hamilton_cycles(complete_bipartite(3, 3)).cycles, BigCount(6));
  EXPECT_EQ(count_hamilton_cycles(petersen_graph()).cycles, BigCount(0));
  EXPECT_EQ(count_hamilton_cycles(path_graph(2)).cycles, BigCount(0));
}

TEST(Counting, MatchesPermutationOracle) {
  for (const auto& [name, g] : corpus::small_graphs()) {
    const BigCount want(oracle::hamilton_cycles(g));
    for (auto m : {CountMethod::Auto, CountMethod::SubsetDp, CountMethod::BranchAndBound}) {
      HamiltonCountOptions o;
      o.method = m;
      EXPECT_EQ(count_hamilton_cycles(g, o).cycles, want) << name;
    }
  }
}

TEST(Counting, MethodsAgreeOnMediumGraphs) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Graph g = random_regular(18, 3, seed);
    HamiltonCountOptions dp, bb;
    dp.method = CountMethod::SubsetDp;
    bb.method = CountMethod::BranchAndBound;
    EXPECT_EQ(count_hamilton_cycles(g, dp).cycles, count_hamilton_cycles(g, bb).cycles) << seed;
  }
}

TEST(Counting, BudgetsReportPartialProgress) {
  HamiltonCountOptions o;
  o.method = CountMethod::BranchAndBound;
  o.max_search_nodes = 100;
  try {
    count_hamilton_cycles(complete_graph(12), o);
    FAIL() << "expected the node budget to run out";
  } catch (const CountLimitError& e) {
    EXPECT_EQ(e.method(), "branch-and-bound");
    EXPECT_GT(e.work(), 0u);
  }
  HamiltonCountOptions big;
  big.method = CountMethod::SubsetDp;
  EXPECT_THROW(count_hamilton_cycles(cycle_graph(kMaxDpOrder + 1), big), ResourceLimitError);
}

TEST(FormulaGap, CompleteGraphsApproachTheFormula) {
  double previous = 1e9;
  for (unsigned n = 5; n <= 10; ++n) {
    const Graph g = complete_graph(n);
    const auto gap = formula_gap(g, count_hamilton_cycles(g).cycles);
    EXPECT_NEAR(gap.log_formula, std::lgamma(n + 1.0) + n * std::log(double(n - 1) / n), 1e-9);
    EXPECT_LT(std::abs(gap.gap_per_vertex), previous);
    previous = std::abs(gap.gap_per_vertex);
    ASSERT_TRUE(gap.below_permanent.has_value());
    EXPECT_TRUE(*gap.below_permanent);
    EXPECT_TRUE(gap.below_bregman);
  }
}

TEST(FormulaGap, CycleIsReportedOnly) {
  const auto gap = formula_gap(cycle_graph(8), BigCount(1));
  EXPECT_NEAR(gap.log_h, 0.0, 1e-12);
  EXPECT_NEAR(gap.log_formula, std::lgamma(9.0) + 8 * std::log(2.0 / 8), 1e-9);
}
