#include <gtest/gtest.h>

#include <cmath>

#include "pseudoham/bounds.hpp"
#include "pseudoham/constructions.hpp"
#include "pseudoham/error.hpp"
#include "pseudoham/generators.hpp"
#include "pseudoham/hamilton.hpp"
#include "pseudoham/max_clique.hpp"

using namespace pseudoham;

namespace {

double log_half_factorial(std::size_t n) { return std::lgamma(double(n) + 1) - std::log(2.0); }

bool is_clique(const Graph& g, const std::vector<Vertex>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j])) return false;
  return true;
}

std::size_t brute_clique(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<Vertex> c;
    for (Vertex v = 0; v < n; ++v)
      if (s >> v & 1) c.push_back(v);
    if (c.size() > best && is_clique(g, c)) best = c.size();
  }
  return best;
}

}  // namespace

TEST(Targets, ParseAndDetect) {
  EXPECT_EQ(parse_target("c6"), even_cycle_target(3));
  EXPECT_EQ(parse_target("c2k:7"), even_cycle_target(7));
  EXPECT_EQ(parse_target("k23"), k2s_target(3));
  EXPECT_EQ(parse_target("k2s:5"), k2s_target(5));
  EXPECT_EQ(parse_target("k24").name(), "K2,4");
  EXPECT_EQ(even_cycle_target(5).name(), "C10");
  EXPECT_THROW(parse_target("c5"), PreconditionError);
  EXPECT_THROW(parse_target("c2k:1"), PreconditionError);
  EXPECT_THROW(parse_target("banana"), PreconditionError);
  EXPECT_TRUE(contains_target(cycle_graph(6), even_cycle_target(3)));
  EXPECT_FALSE(contains_target(cycle_graph(6), even_cycle_target(2)));
  EXPECT_TRUE(contains_target(complete_bipartite(2, 3), k2s_target(3)));
}

TEST(MaxClique, MatchesSubsetOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_gnp(14, 0.3 + 0.02 * double(seed), seed);
    const auto r = max_clique(g);
    EXPECT_TRUE(r.proven_optimal);
    EXPECT_TRUE(is_clique(g, r.vertices));
    EXPECT_EQ(r.vertices.size(), brute_clique(g)) << seed;
  }
  EXPECT_EQ(max_clique(complete_graph(9)).vertices.size(), 9u);
}

TEST(UpperBound, UsesFreeGraphCount) {
  const Graph gq = build_generalized_quadrangle(2).graph;
  const auto h = count_hamilton_cycles(gq);
  EXPECT_GT(h.cycles, BigCount(0));
  const auto r = upper_bound_from_free_graph(gq, even_cycle_target(3), h.cycles.log(), "exact");
  EXPECT_EQ(r.direction, "upper");
  EXPECT_EQ(r.n, 30u);
  EXPECT_NEAR(r.log_value, log_half_factorial(30) - h.cycles.log(), 1e-9);
  EXPECT_NEAR(replay_bound(r), r.log_value, 1e-9);
  EXPECT_FALSE(r.derivation.empty());
}

TEST(UpperBound, SinglePathGivesTrivialBound) {
  const auto r = upper_bound_from_free_graph(cycle_graph(8), k2s_target(3), 0.0);
  EXPECT_NEAR(r.log_value, log_half_factorial(8), 1e-12);
}

TEST(UpperBound, FurediGraphIsK23Free) {
  const Graph z12 = build_furedi(2, 5).graph;
  const auto h = count_hamilton_cycles(z12);
  const auto r = upper_bound_from_free_graph(z12, k2s_target(3), h.cycles.log(), "exact");
  EXPECT_LT(r.log_value, log_half_factorial(12));
  EXPECT_NEAR(replay_bound(r), r.log_value, 1e-9);
}

TEST(UpperBound, RejectsGraphsContainingTheTarget) {
  EXPECT_THROW(upper_bound_from_free_graph(complete_graph(6), even_cycle_target(2), 0.0), PreconditionError);
  EXPECT_THROW(upper_bound_from_free_graph(cycle_graph(8), even_cycle_target(2), -1.0), PreconditionError);
  EXPECT_THROW(upper_bound_from_free_graph(cycle_graph(8), even_cycle_target(2), NAN), PreconditionError);
}

TEST(ExponentTable, ReferenceValues) {
  auto find = [](const std::vector<ExponentRow>& rows, double e) {
    return std::any_of(rows.begin(), rows.end(), [&](const ExponentRow& r) { return std::abs(r.exponent - e) < 1e-12; });
  };
  const auto c6 = theorem_exponent_table(even_cycle_target(3));
  EXPECT_TRUE(find(c6, 7.0 / 9));
  EXPECT_TRUE(find(c6, 2.0 / 3));
  EXPECT_TRUE(find(theorem_exponent_table(even_cycle_target(4)), 4.0 / 5));
  EXPECT_TRUE(find(theorem_exponent_table(even_cycle_target(5)), 4.0 / 5));
  const auto k24 = theorem_exponent_table(k2s_target(4));
  ASSERT_EQ(k24.size(), 1u);
  EXPECT_NEAR(k24[0].exponent, 0.5, 1e-12);
  ASSERT_TRUE(k24[0].base_factor.has_value());
  EXPECT_NEAR(*k24[0].base_factor, 1 / std::sqrt(3.0), 1e-12);
  const auto k23 = theorem_exponent_table(k2s_target(3));
  EXPECT_NEAR(*k23[0].base_factor, 1 / std::sqrt(2.0), 1e-12);
  bool conditional = false;
  for (const auto& r : theorem_exponent_table(even_cycle_target(6))) conditional = conditional || r.conditional;
  EXPECT_TRUE(conditional);
}

TEST(K23Family, TwoBlocksContainK23OnNamedVertices) {
  const auto fam = build_k23_family({{0, 1}, {1, 0}});
  ASSERT_EQ(fam.paths.size(), 2u);
  EXPECT_EQ(fam.n, 8u);
  const auto u = edge_union(8, path_edges(fam.paths[0]), path_edges(fam.paths[1]));
  // x_{tau(2)}, y_{tau(2)} against b_1, a_2, b_2 with tau = (1, 0)
  const Vertex x = 2, y = 3, b1 = 1, a2 = 4, b2 = 5;
  for (Vertex s : {x, y})
    for (Vertex t : {b1, a2, b2}) EXPECT_TRUE(u.adjacent(s, t)) << s << " " << t;
  EXPECT_TRUE(verify_creating_family(fam).passed);
}

TEST(K23Family, TrivialFamilies) {
  EXPECT_TRUE(verify_creating_family(build_k23_family({{0}})).passed);
  EXPECT_EQ(build_k23_family({{0, 1, 2, 3}}).paths.size(), 1u);
  EXPECT_THROW(build_k23_family({{0, 0}}), PreconditionError);
  EXPECT_THROW(build_k23_family({{0, 1}, {0, 1, 2}}), PreconditionError);
}

TEST(K23Family, DuplicatePathsFail) {
  const auto fam = build_k23_family({{0, 1, 2}, {0, 1, 2}});
  const auto v = verify_creating_family(fam);
  EXPECT_FALSE(v.passed);
  ASSERT_TRUE(v.first_failure.has_value());
}

TEST(K23Family, CollisionIsSufficientNotNecessary) {
  // At m = 3 the non-colliding pairs still share two x vertices joined to
  // the same a and b vertices, so every pair creates K2,3.
  std::vector<Permutation> perms;
  Permutation p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::size_t non_colliding = 0;
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i + 1; j < perms.size(); ++j) {
      non_colliding += !permutations_collide(perms[i], perms[j]);
      EXPECT_TRUE(verify_creating_family(build_k23_family({perms[i], perms[j]})).passed);
    }
  EXPECT_EQ(non_colliding, 3u);
}

TEST(Colliding, SmallSearches) {
  EXPECT_EQ(colliding_family_search(1).family.size(), 1u);
  const auto two = colliding_family_search(2);
  EXPECT_EQ(two.family.size(), 2u);
  EXPECT_TRUE(permutations_collide({0, 1}, {1, 0}));
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto c = colliding_family_search(m);
    EXPECT_TRUE(c.proven_optimal) << m;
    for (std::size_t i = 0; i < c.family.size(); ++i)
      for (std::size_t j = i + 1; j < c.family.size(); ++j) EXPECT_TRUE(permutations_collide(c.family[i], c.family[j]));
    const auto fam = build_k23_family(c.family);
    const auto v = verify_creating_family(fam);
    EXPECT_TRUE(v.passed) << m;
    const auto lb = lower_bound_from_family(fam, v);
    EXPECT_EQ(lb.direction, "lower");
    EXPECT_NEAR(lb.log_value, std::log(double(c.family.size())), 1e-12);
  }
  EXPECT_THROW(colliding_family_search(kMaxCollidingM + 1), ResourceLimitError);
}

TEST(HamiltonPaths, CompleteGraphListing) {
  const auto p4 = hamilton_paths_of_complete(4);
  EXPECT_EQ(p4.size(), 12u);
  for (const auto& p : p4) EXPECT_LT(p.front(), p.back());
  EXPECT_TRUE(std::is_sorted(p4.begin(), p4.end()));
  EXPECT_EQ(hamilton_paths_of_complete(6).size(), 360u);
}

TEST(BruteForceHn, FixturesUpToFive) {
  struct Row {
    TargetGraph target;
    std::size_t n, creating, avoiding;
  };
  const Row rows[] = {{even_cycle_target(2), 4, 6, 2},  {even_cycle_target(2), 5, 12, 5},
                      {even_cycle_target(3), 4, 1, 12}, {even_cycle_target(3), 5, 1, 60},
                      {k2s_target(3), 4, 1, 12},        {k2s_target(3), 5, 4, 12}};
  for (const auto& r : rows) {
    const auto h = brute_force_hn(r.n, r.target);
    EXPECT_TRUE(h.creating_optimal && h.avoiding_optimal);
    EXPECT_EQ(h.creating, r.creating) << r.target.name() << " n=" << r.n;
    EXPECT_EQ(h.avoiding, r.avoiding) << r.target.name() << " n=" << r.n;
    EXPECT_TRUE(h.product_holds);
    EXPECT_LE(h.creating * h.avoiding, h.paths);
    EXPECT_EQ(h.creating_family.size(), h.creating);
    EXPECT_EQ(h.avoiding_family.size(), h.avoiding);
  }
  EXPECT_THROW(brute_force_hn(7, even_cycle_target(2)), ResourceLimitError);
  EXPECT_THROW(brute_force_hn(1, even_cycle_target(2)), Error);
}

TEST(BruteForceHn, K23AtSix) {
  const auto h = brute_force_hn(6, k2s_target(3));
  EXPECT_TRUE(h.creating_optimal && h.avoiding_optimal);
  EXPECT_EQ(h.creating, 8u);
  EXPECT_EQ(h.avoiding, 40u);
  EXPECT_TRUE(h.product_holds);
}
