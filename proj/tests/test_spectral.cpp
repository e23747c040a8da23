#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>
#include <random>

#include "pseudoham/constructions.hpp"
#include "pseudoham/eigensolver.hpp"
#include "pseudoham/error.hpp"
#include "pseudoham/generators.hpp"
#include "pseudoham/spectral.hpp"

using namespace pseudoham;

namespace {

std::vector<double> eigen_oracle(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + g.order());
  std::sort(out.rbegin(), out.rend());
  return out;
}

void expect_trace_identities(const Graph& g, const std::vector<double>& ev) {
  double s1 = 0, s2 = 0;
  for (double x : ev) {
    s1 += x;
    s2 += x * x;
  }
  EXPECT_NEAR(s1, 0.0, 1e-6);
  EXPECT_NEAR(s2, 2.0 * double(g.size()), 1e-6);
}

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> v(g.order());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST(Eigensolver, MatchesEigenOnRandomSymmetricMatrices) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::size_t n : {1, 2, 3, 7, 20, 64}) {
    DenseMatrix m(n);
    Eigen::MatrixXd e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = e(i, j) = e(j, i) = u(rng);
    auto ours = symmetric_eigenvalues(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e, Eigen::EigenvaluesOnly);
    std::vector<double> ref(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(ref.rbegin(), ref.rend());
    ASSERT_EQ(ours.size(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(ours[i], ref[i], 1e-9);
  }
}

TEST(Spectrum, CompleteGraph) {
  const auto ev = spectrum(complete_graph(4));
  ASSERT_EQ(ev.size(), 4u);
  EXPECT_NEAR(ev[0], 3.0, 1e-12);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(ev[i], -1.0, 1e-12);
}

TEST(Spectrum, MatchesEigenOracle) {
  std::vector<Graph> graphs = {petersen_graph(), cycle_graph(9), random_gnp(40, 0.2, 1), random_regular(30, 4, 2),
                               build_generalized_quadrangle(2).graph, build_furedi(2, 5).graph,
                               complete_bipartite(3, 5)};
  for (const Graph& g : graphs) {
    const auto ev = spectrum(g);
    const auto ref = eigen_oracle(g);
    ASSERT_EQ(ev.size(), ref.size());
    for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], ref[i], 1e-8 * double(g.order()));
    expect_trace_identities(g, ev);
  }
}

TEST(Spectrum, QuadrangleValuesAndSymmetry) {
  const Graph g = build_generalized_quadrangle(2).graph;
  const auto ev = spectrum(g);
  for (double x : ev) {
    const double a = std::abs(x);
    EXPECT_TRUE(std::abs(a - 3) < 1e-6 || std::abs(a - 2) < 1e-6 || a < 1e-6) << x;
  }
  for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], -ev[ev.size() - 1 - i], 1e-6);
}

TEST(Spectrum, SizeCap) {
  const Graph big(kMaxSpectrumOrder + 1, std::vector<Edge>{});
  EXPECT_THROW(spectrum(big), ResourceLimitError);
}

TEST(Certificate, RegularBipartiteHasZeroSpread) {
  const auto cert = certify(build_generalized_quadrangle(3).graph);
  EXPECT_EQ(cert.mode, SpectralMode::BipartiteRegular);
  EXPECT_EQ(cert.cond1_ratio, 0.0);
  EXPECT_EQ(cert.R, 0.0);
  EXPECT_NEAR(cert.lambda, std::sqrt(6.0), 1e-9);
  EXPECT_NEAR(cert.lambda_bar, cert.lambda, 1e-12);
  ASSERT_TRUE(cert.symmetry_error.has_value());
  EXPECT_LT(*cert.symmetry_error, 1e-6);
  EXPECT_NEAR(cert.lambda_n, -cert.lambda_1, 1e-6);
  EXPECT_TRUE(cert.cond5_ratio.has_value());
}

TEST(Certificate, FurediSpread) {
  const auto cert = certify(build_furedi(2, 5).graph);
  EXPECT_EQ(cert.mode, SpectralMode::Irregular);
  EXPECT_EQ(cert.degrees.max_degree - cert.degrees.min_degree, 1u);
  EXPECT_NEAR(cert.R, 1.0 / cert.lambda, 1e-12);
  EXPECT_NEAR(cert.lambda_bar, (10 * cert.R + 1) * cert.lambda, 1e-12);
  EXPECT_GE(cert.lambda, 0.0);
}

TEST(Certificate, RatiosFollowDefinitions) {
  const Graph g = random_gnp(60, 0.3, 5);
  const auto cert = certify(g, SpectralMode::Irregular);
  const double n = 60, d = cert.degrees.average(), l = cert.lambda;
  EXPECT_NEAR(cert.cond2_ratio, (d / l) / (std::log(n) * std::log(n)), 1e-12);
  EXPECT_NEAR(cert.cond3_ratio, std::log(d) * std::log(d / l) / std::log(n), 1e-12);
  EXPECT_NEAR(cert.cond1_ratio, double(cert.degrees.max_degree - cert.degrees.min_degree) / l, 1e-12);
  EXPECT_EQ(cert.cond2_pass, cert.cond2_ratio >= 1.0);
  CertificateThresholds loose;
  loose.cond2_min = 0.0;
  EXPECT_TRUE(certify(g, SpectralMode::Irregular, loose).cond2_pass);
  EXPECT_THROW(certify(g, SpectralMode::BipartiteRegular), PreconditionError);
}

TEST(Mixing, WholeVertexSetHasNoDiscrepancy) {
  const Graph g = random_regular(24, 3, 9);
  const auto v = all_vertices(g);
  const auto t = irregular_mixing_terms(g, v, v, 1.0);
  EXPECT_NEAR(t.lhs, 0.0, 1e-9);
  const auto e = irregular_mixing_terms(g, {}, v, 1.0);
  EXPECT_EQ(e.lhs, 0.0);
  EXPECT_EQ(e.rhs, 0.0);
  EXPECT_EQ(ordered_edge_count(g, v, v), 2 * g.size());
}

TEST(Mixing, BipartiteSidesHaveNoDiscrepancy) {
  const Graph g = build_generalized_quadrangle(2).graph;
  const auto x = g.side_vertices(0), y = g.side_vertices(1);
  const auto t = bipartite_mixing_terms(g, x, y, 2.0);
  EXPECT_NEAR(t.lhs, 0.0, 1e-9);
  const auto e = bipartite_mixing_terms(g, x, {}, 2.0);
  EXPECT_EQ(e.lhs, 0.0);
  EXPECT_EQ(e.rhs, 0.0);
}

TEST(Mixing, NoViolationsFromExactSpectrum) {
  const Graph z12 = build_furedi(2, 5).graph;
  const auto cert = certify(z12);
  const auto r = verify_mixing_irregular(z12, cert.lambda_bar, 10000, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.samples, 10000u);
  const Graph gq = build_generalized_quadrangle(2).graph;
  const auto rb = verify_mixing_bipartite(gq, 2.0, 10000, 1);
  EXPECT_TRUE(rb.passed());
  EXPECT_LE(rb.max_bound_ratio, 1.0 + 1e-9);
}

TEST(Mixing, IrregularNeedsTheSpreadTerm) {
  // With lambda itself instead of lambda_bar the irregular form can fail; the
  // verifier must notice when the bound is made too small.
  const Graph g = random_gnp(30, 0.3, 4);
  const auto r = verify_mixing_irregular(g, 0.01, 2000, 3);
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.first_violation.has_value());
  EXPECT_GT(r.first_violation->terms.lhs, r.first_violation->terms.rhs);
}

TEST(Mixing, DeterministicForSeed) {
  const Graph g = build_furedi(2, 9).graph;
  const auto a = verify_mixing_irregular(g, 5.0, 3000, 42);
  const auto b = verify_mixing_irregular(g, 5.0, 3000, 42);
  EXPECT_EQ(a.max_normalized_discrepancy, b.max_normalized_discrepancy);
  EXPECT_EQ(a.violations, b.violations);
}

TEST(Corollaries, ConstructionsPassOrAreVacuous) {
  for (const Graph& g : {build_furedi(2, 5).graph, build_generalized_quadrangle(3).graph, build_furedi(3, 7).graph}) {
    const auto cert = certify(g);
    const auto rep = verify_corollaries(g, cert, 2000, 5);
    EXPECT_TRUE(rep.passed());
    EXPECT_FALSE(rep.results.empty());
    for (const auto& c : rep.results) {
      EXPECT_EQ(c.failed, 0u) << c.name;
      if (!c.applicable) {
        EXPECT_FALSE(c.vacuous_reason.empty()) << c.name;
      }
    }
  }
}
