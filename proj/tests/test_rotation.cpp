#include <gtest/gtest.h>

#include <cmath>

#include "pseudoham/constructions.hpp"
#include "pseudoham/error.hpp"
#include "pseudoham/generators.hpp"
#include "pseudoham/hamilton.hpp"
#include "pseudoham/rotation.hpp"
#include "pseudoham/spectral.hpp"

using namespace pseudoham;

TEST(Rotation, BudgetFormula) {
  EXPECT_EQ(rotation_budget(30, 3.0, 2.0), 50u * std::size_t(std::ceil(std::log(30.0) / std::log(1.5))));
  // d below lambda_bar: the denominator is clamped at 0.1
  EXPECT_EQ(rotation_budget(100, 2.0, 5.0), 50u * std::size_t(std::ceil(std::log(100.0) / 0.1)));
}

TEST(Rotation, HamiltonCycleNeedsNoReplacements) {
  const Graph g = cycle_graph(10);
  TwoFactor f{{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}};
  const auto out = rotate_to_hamilton(g, f, 100, 0);
  ASSERT_TRUE(out.success);
  EXPECT_TRUE(out.trace.replacements.empty());
  EXPECT_TRUE(is_hamilton_cycle(g, out.trace.result));
  EXPECT_TRUE(replay_trace(g, f, out.trace));
}

TEST(Rotation, QuadrangleFactorsBecomeHamiltonCycles) {
  const Graph g = build_generalized_quadrangle(2).graph;
  const auto cert = certify(g);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = random_two_factor(g, seed);
    ASSERT_TRUE(f.has_value());
    const auto out = rotate_to_hamilton(g, *f, cert, seed);
    ASSERT_TRUE(out.success) << out.failure;
    EXPECT_TRUE(is_hamilton_cycle(g, out.trace.result));
    std::string why;
    EXPECT_TRUE(replay_trace(g, *f, out.trace, &why)) << why;
    for (std::size_t len : out.trace.merge_path_lengths) EXPECT_EQ(len % 2, 1u) << seed;
    EXPECT_EQ(out.trace.merges + 1, f->cycle_count());
  }
}

TEST(Rotation, DeterministicForSeed) {
  const Graph g = random_regular(30, 3, 5);
  const auto f = random_two_factor(g, 3);
  ASSERT_TRUE(f.has_value());
  const auto a = rotate_to_hamilton(g, *f, 200, 9);
  const auto b = rotate_to_hamilton(g, *f, 200, 9);
  EXPECT_EQ(a.success, b.success);
  EXPECT_EQ(a.trace.result, b.trace.result);
  EXPECT_EQ(a.trace.replacements.size(), b.trace.replacements.size());
}

TEST(Rotation, DisconnectedGraphFailsWithReason) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 3; ++i) {
    es.push_back({i, Vertex((i + 1) % 3)});
    es.push_back({Vertex(3 + i), Vertex(3 + (i + 1) % 3)});
  }
  const Graph g(6, es);
  const auto out = rotate_to_hamilton(g, TwoFactor{{{0, 1, 2}, {3, 4, 5}}}, 100, 0);
  EXPECT_FALSE(out.success);
  EXPECT_NE(out.failure.find("disconnected"), std::string::npos);
}

TEST(Rotation, RejectsNonFactor) {
  EXPECT_THROW(rotate_to_hamilton(cycle_graph(6), TwoFactor{{{0, 1, 2}}}, 100, 0), PreconditionError);
}

TEST(Replay, DetectsTamperedTrace) {
  const Graph g = build_generalized_quadrangle(2).graph;
  const auto f = random_two_factor(g, 1);
  ASSERT_TRUE(f.has_value());
  auto out = rotate_to_hamilton(g, *f, 500, 1);
  ASSERT_TRUE(out.success);
  if (!out.trace.replacements.empty()) {
    auto bad = out.trace;
    bad.replacements.pop_back();
    EXPECT_FALSE(replay_trace(g, *f, bad));
  }
  auto bad = out.trace;
  std::swap(bad.result[0], bad.result[1]);
  EXPECT_FALSE(replay_trace(g, *f, bad));
}
