#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pseudoham/constructions.hpp"
#include "pseudoham/error.hpp"
#include "pseudoham/generators.hpp"
#include "pseudoham/permanent.hpp"
#include "pseudoham/spectral.hpp"

using namespace pseudoham;

namespace {

BinaryMatrix random_binary(std::size_t n, double p, std::mt19937_64& rng) {
  BinaryMatrix m(n);
  std::bernoulli_distribution b(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, b(rng));
  return m;
}

BinaryMatrix identity(std::size_t n) {
  BinaryMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

}  // namespace

TEST(Permanent, SmallExamples) {
  EXPECT_EQ(permanent_exact(identity(3)), BigCount(1));
  EXPECT_EQ(permanent_exact(BinaryMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})), BigCount(6));
  EXPECT_EQ(permanent_exact(BinaryMatrix::adjacency(cycle_graph(4))), BigCount(4));
  EXPECT_EQ(permanent_exact(BinaryMatrix(0)), BigCount(1));
  EXPECT_THROW(BinaryMatrix::from_rows({{1, 2}, {0, 1}}), PreconditionError);
  EXPECT_THROW(BinaryMatrix::from_rows({{1, 0}}), PreconditionError);
  EXPECT_THROW(permanent_exact(BinaryMatrix(kMaxRyserOrder + 1)), ResourceLimitError);
}

TEST(Permanent, AllOnesIsFactorial) {
  for (unsigned n = 1; n <= 16; ++n) {
    BinaryMatrix j(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) j.set(a, b, true);
    EXPECT_EQ(permanent_exact(j), factorial(n)) << n;
  }
}

TEST(Permanent, MatchesPermutationOracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto m = random_binary(n, 0.5, rng);
    EXPECT_EQ(permanent_exact(m), BigCount(oracle::permanent(m)));
    EXPECT_NEAR(permanent_real(m.to_dense()), double(oracle::permanent(m)), 1e-6);
  }
}

TEST(Bregman, Examples) {
  BinaryMatrix j3(3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) j3.set(a, b, true);
  EXPECT_NEAR(bregman_bound(j3), std::log(6.0), 1e-12);
  EXPECT_NEAR(bregman_bound(identity(3)), 0.0, 1e-12);
  EXPECT_NEAR(bregman_bound(BinaryMatrix::adjacency(cycle_graph(4))), 2 * std::log(2.0), 1e-12);
  EXPECT_EQ(bregman_bound(4, 3), -std::numeric_limits<double>::infinity());
  // t = 7 over n = 3: rows 2, 2, 3
  EXPECT_NEAR(bregman_bound(3, 7), 2 * std::log(2.0) / 2 + std::log(6.0) / 3, 1e-12);
}

TEST(Bregman, BoundsExactPermanent) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const auto m = random_binary(n, 0.2 + 0.6 * double(trial % 5) / 4, rng);
    const auto b = permanent_bounds(m);
    ASSERT_TRUE(b.exact.has_value());
    EXPECT_LE(b.exact->log(), b.bregman_log + 1e-9);
    EXPECT_LE(b.exact->log(), b.minc_row_log + 1e-9);
  }
}

TEST(VanDerWaerden, SinkhornNormalisedMatrices) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 10;
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
    const auto ds = sinkhorn_normalize(m);
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0, c = 0;
      for (std::size_t j = 0; j < n; ++j) {
        r += ds(i, j);
        c += ds(j, i);
      }
      EXPECT_NEAR(r, 1.0, 1e-10);
      EXPECT_NEAR(c, 1.0, 1e-10);
    }
    EXPECT_GE(std::log(permanent_real(ds)), van_der_waerden_log(n) - 1e-9);
  }
  EXPECT_THROW(sinkhorn_normalize(DenseMatrix(2, 0.0)), PreconditionError);
}

TEST(VanDerWaerden, RegularMatrices) {
  const auto b = permanent_bounds(BinaryMatrix::adjacency(build_generalized_quadrangle(2).graph), false);
  EXPECT_FALSE(b.exact.has_value());
  ASSERT_TRUE(b.vdw_log.has_value());
  EXPECT_NEAR(*b.vdw_log, 30 * std::log(3.0) + van_der_waerden_log(30), 1e-9);
  const auto k33 = permanent_bounds(BinaryMatrix::adjacency(complete_bipartite(3, 3)));
  EXPECT_GE(k33.exact->log(), *k33.vdw_log - 1e-9);
}

TEST(Superstochastic, SimpleVerdicts) {
  DenseMatrix id(4);
  for (std::size_t i = 0; i < 4; ++i) id(i, i) = 1.0;
  EXPECT_EQ(is_doubly_superstochastic(id).verdict, Verdict::Yes);

  DenseMatrix zero_row(3, 1.0);
  for (std::size_t j = 0; j < 3; ++j) zero_row(1, j) = 0.0;
  const auto r = is_doubly_superstochastic(zero_row);
  EXPECT_EQ(r.verdict, Verdict::No);
  EXPECT_LT(r.witness_sum, r.witness_required);
  EXPECT_NE(std::find(r.witness_rows.begin(), r.witness_rows.end(), 1u), r.witness_rows.end());
}

TEST(Superstochastic, FlowMatchesExhaustiveOracle) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::bernoulli_distribution sparse(0.3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    DenseMatrix m(n);
    const double scale = 0.5 + 2.5 * u(rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = sparse(rng) ? 0.0 : scale * u(rng);
    const auto r = is_doubly_superstochastic(m);
    EXPECT_EQ(r.verdict == Verdict::Yes, oracle::superstochastic(m)) << trial;
    if (r.verdict == Verdict::No) {
      double s = 0;
      for (auto i : r.witness_rows)
        for (auto j : r.witness_cols) s += m(i, j);
      EXPECT_NEAR(s, r.witness_sum, 1e-9);
      EXPECT_LT(s, double(r.witness_rows.size() + r.witness_cols.size()) - double(n));
    }
  }
}

TEST(Superstochastic, ScaledChecks) {
  const Graph g = random_regular(20, 4, 1);
  EXPECT_EQ(scaled_superstochastic_check(g, 4.0).verdict, Verdict::Yes);
  const Graph z40 = build_furedi(2, 9).graph;
  const auto cert = certify(z40);
  ASSERT_LE(double(cert.degrees.min_degree) - 9 * cert.lambda_bar, 0.0);
  const auto na = scaled_superstochastic_check(z40, cert);
  EXPECT_EQ(na.verdict, Verdict::NotApplicable);
  EXPECT_FALSE(na.reason.empty());
}

TEST(LowerChain, MonotoneAndFirstStep) {
  const auto chain = permanent_lower_chain(1000, 500.0, 500.0, 1.0);
  ASSERT_FALSE(chain.steps.empty());
  EXPECT_TRUE(chain.monotone());
  for (const auto& s : chain.steps) EXPECT_TRUE(s.holds) << s.expression;
  bool found = false;
  for (const auto& s : chain.steps) found = found || std::abs(s.log_value - 1000 * std::log(491.0 / std::exp(1.0))) < 1e-6;
  EXPECT_TRUE(found);
  EXPECT_THROW(permanent_lower_chain(10, 3.0, 3.0, 1.0), PreconditionError);
}

TEST(LowerChain, BelowExactPermanentWhenGuardHolds) {
  // dense regular graph with a small spectral gap parameter forced by hand
  const Graph g = complete_graph(12);
  const double lambda_bar = 1.0;  // lambda of K_12 is 1 and it is regular
  const auto chain = permanent_lower_chain(12, 11.0, 11.0, lambda_bar);
  const auto exact = permanent_exact(BinaryMatrix::adjacency(g));
  for (const auto& s : chain.steps) EXPECT_LE(s.log_value, exact.log() + 1e-9) << s.expression;
}

TEST(UpperChain, EvaluatesAndFlags) {
  const auto chain = permanent_upper_chain(1000, 50.0);
  ASSERT_GE(chain.steps.size(), 2u);
  for (const auto& s : chain.steps) EXPECT_TRUE(std::isfinite(s.log_value));
}
