#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pseudoham/graph.hpp"

namespace pseudoham {

/// Adjacency eigenvalues, descending. Graphs with a recorded bipartition are
/// solved through N N^T on the smaller side and mapped to +-sqrt(mu).
/// Throws ResourceLimitError above kMaxSpectrumOrder vertices.
inline constexpr std::size_t kMaxSpectrumOrder = 5000;
std::vector<double> spectrum(const Graph& g);

/// Dense spectrum of A + diag(loops): g's adjacency with a loop added at each
/// listed vertex.
std::vector<double> spectrum_with_loops(const Graph& g, std::span<const Vertex> loops);

enum class SpectralMode { Irregular, BipartiteRegular };

std::string mode_name(SpectralMode m);  // "irregular", "bipartite-regular"
SpectralMode parse_mode(const std::string& s);

/// Pass thresholds for the finite surrogates of the asymptotic conditions.
struct CertificateThresholds {
  double r_max = 1.0;      // cond1 passes iff Delta - delta <= r_max * lambda
  double cond2_min = 1.0;  // (d/lambda) / log^2 n
  double cond3_min = 1.0;  // log d * log(d/lambda) / log n
  double cond5_min = 1.0;  // log(d/lambda) / log log n, bipartite mode only
  double cond6_min = 1.0;  // as cond3, bipartite mode only
};

struct SpectralCertificate {
  SpectralMode mode = SpectralMode::Irregular;
  std::size_t n = 0;
  std::size_t edges = 0;
  DegreeProfile degrees;
  double lambda_1 = 0.0;
  double lambda_n = 0.0;
  /// Irregular: max |lambda_i|, i != 1. Bipartite: max lambda_i, i != 1.
  double lambda = 0.0;
  double R = 0.0;  // (Delta - delta) / lambda, 0 when lambda = 0
  double lambda_bar = 0.0;  // (10R + 1) lambda

  double cond1_ratio = 0.0;
  double cond2_ratio = 0.0;
  double cond3_ratio = 0.0;
  // Same ratios with lambda_bar in place of lambda.
  double cond1_primed_slack = 0.0;  // lambda_bar - (Delta - delta)
  double cond2_primed_ratio = 0.0;
  double cond3_primed_ratio = 0.0;
  std::optional<double> cond5_ratio;
  std::optional<double> cond6_ratio;
  /// Bipartite mode: max |lambda_i + lambda_{n+1-i}|.
  std::optional<double> symmetry_error;

  bool cond1_pass = false;
  bool cond2_pass = false;
  bool cond3_pass = false;
  std::optional<bool> cond5_pass;
  std::optional<bool> cond6_pass;
  CertificateThresholds thresholds;
};

/// Bipartite mode requires a regular bipartite graph; when no bipartition is
/// recorded one is computed. Without a mode, regular graphs with a recorded
/// bipartition are certified in bipartite mode and everything else irregular.
SpectralCertificate certify(const Graph& g, std::optional<SpectralMode> mode = std::nullopt,
                            const CertificateThresholds& thresholds = {});
/// Same, from a precomputed spectrum (descending).
SpectralCertificate certify_from_spectrum(const Graph& g, const std::vector<double>& eigenvalues,
                                          SpectralMode mode, const CertificateThresholds& thresholds = {});

/// Slack allowed on every sampled inequality.
inline constexpr double kMixingSlack = 1e-9;

struct MixingTerms {
  double lhs = 0.0;  // |e(U,W) - expected|
  double rhs = 0.0;  // the lemma's bound
  bool holds() const { return lhs <= rhs + kMixingSlack * (1.0 + rhs); }
};

/// Directed edge count: pairs (u, w) with u in U, w in W and u ~ w.
std::size_t ordered_edge_count(const Graph& g, const std::vector<Vertex>& U, const std::vector<Vertex>& W);

/// |e(U,W) - d|U||W|/n| against lambda_bar sqrt(|U||W|).
MixingTerms irregular_mixing_terms(const Graph& g, const std::vector<Vertex>& U, const std::vector<Vertex>& W,
                                   double lambda_bar);
/// |e(U,W) - 2d|U||W|/n| against lambda sqrt(|U||W|(1-|U|/n)(1-|W|/n)).
MixingTerms bipartite_mixing_terms(const Graph& g, const std::vector<Vertex>& U, const std::vector<Vertex>& W,
                                   double lambda);

struct MixingViolation {
  std::vector<Vertex> U;
  std::vector<Vertex> W;
  MixingTerms terms;
};

struct MixingReport {
  std::string lemma;  // "irregular" or "bipartite"
  double bound_parameter = 0.0;  // lambda_bar or lambda
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t violations = 0;
  /// max |e(U,W) - expected| / sqrt(...) over samples, the empirical constant.
  double max_normalized_discrepancy = 0.0;
  double max_bound_ratio = 0.0;  // max lhs / rhs over samples with rhs > 0
  /// sum over v of (deg v - d)^2.
  double degree_variance_sum = 0.0;
  std::optional<MixingViolation> first_violation;
  bool passed() const { return violations == 0; }
};

/// Samples (U, W): each set gets a uniform size in 1..n, then a uniform subset.
MixingReport verify_mixing_irregular(const Graph& g, double lambda_bar, std::size_t samples, std::uint64_t seed = 0);
/// Same with U inside side X and W inside side Y.
MixingReport verify_mixing_bipartite(const Graph& g, double lambda, std::size_t samples, std::uint64_t seed = 0);

struct CorollaryResult {
  std::string name;
  std::string statement;
  bool applicable = true;
  std::string vacuous_reason;  // set when !applicable
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct CorollaryReport {
  SpectralMode mode = SpectralMode::Irregular;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<CorollaryResult> results;
  bool passed() const;
};

/// Sampled checks of the consequences of the mixing lemma matching cert.mode:
/// edge counts inside a set, sparsity and expansion of small sets, expansion of
/// large sets, sizes of edgeless set pairs, connectivity. A check whose
/// hypotheses fail at this size is reported as not applicable.
CorollaryReport verify_corollaries(const Graph& g, const SpectralCertificate& cert, std::size_t samples,
                                   std::uint64_t seed = 0);

}  // namespace pseudoham
