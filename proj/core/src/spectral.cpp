#include "pseudoham/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>

#include "pseudoham/eigensolver.hpp"
#include "pseudoham/error.hpp"
#include "pseudoham/parallel.hpp"
#include "pseudoham/rng.hpp"

namespace pseudoham {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kChunk = 128;

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const Graph& g, const std::vector<Vertex>& set) {
  Bits b(g.words_per_row(), 0);
  for (Vertex v : set) b[v >> 6] |= std::uint64_t{1} << (v & 63);
  return b;
}

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t edges_into(const Graph& g, const std::vector<Vertex>& U, const Bits& w) {
  std::size_t total = 0;
  for (Vertex u : U) {
    const auto row = g.row(u);
    for (std::size_t i = 0; i < w.size(); ++i) total += static_cast<std::size_t>(std::popcount(row[i] & w[i]));
  }
  return total;
}

// Vertices outside U with a neighbour in U.
Bits outer_neighborhood(const Graph& g, const std::vector<Vertex>& U) {
  Bits n(g.words_per_row(), 0);
  for (Vertex u : U) {
    const auto row = g.row(u);
    for (std::size_t i = 0; i < n.size(); ++i) n[i] |= row[i];
  }
  for (Vertex u : U) n[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  return n;
}

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

// Uniform k-subset of pool, sorted.
std::vector<Vertex> sample_subset(Rng& rng, std::vector<Vertex> pool, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Uniform size in 1..|pool|, then a uniform subset of that size.
std::vector<Vertex> sample_any_size(Rng& rng, const std::vector<Vertex>& pool) {
  if (pool.empty()) return {};
  const auto k = 1 + static_cast<std::size_t>(uniform_below(rng, pool.size()));
  return sample_subset(rng, pool, k);
}

std::size_t uniform_in(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(uniform_below(rng, hi - lo + 1));
}

// floor(x) that does not lose an integer to rounding noise.
long long floor_tol(double x) { return static_cast<long long>(std::floor(x + 1e-9)); }

double degree_variance_sum(const Graph& g) {
  const double d = g.degree_profile().average();
  double k = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const double dv = static_cast<double>(g.degree(v)) - d;
    k += dv * dv;
  }
  return k;
}

bool is_regular_bipartite(const Graph& g) {
  return g.degree_profile().regular() && two_coloring(g).has_value();
}

Graph with_sides(const Graph& g) {
  if (g.has_bipartition()) return g;
  auto c = two_coloring(g);
  if (!c) throw PreconditionError("graph is not bipartite");
  return g.with_bipartition(std::move(c));
}

struct ChunkResult {
  std::size_t violations = 0;
  double max_norm = 0.0;
  double max_ratio = 0.0;
  std::optional<MixingViolation> first;
};

template <typename Draw>
MixingReport run_mixing(const Graph& g, std::string lemma, double bound, std::size_t samples, std::uint64_t seed,
                        Draw&& draw) {
  MixingReport r;
  r.lemma = std::move(lemma);
  r.bound_parameter = bound;
  r.samples = samples;
  r.seed = seed;
  r.degree_variance_sum = degree_variance_sum(g);
  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<ChunkResult> results(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    Rng rng(derive_seed(seed, c));
    ChunkResult& out = results[c];
    const std::size_t end = std::min(samples, (c + 1) * kChunk);
    for (std::size_t s = c * kChunk; s < end; ++s) {
      auto [U, W, terms, scale] = draw(rng);
      if (scale > 0) out.max_norm = std::max(out.max_norm, terms.lhs / scale);
      if (terms.rhs > 0) out.max_ratio = std::max(out.max_ratio, terms.lhs / terms.rhs);
      if (!terms.holds()) {
        if (!out.first) out.first = MixingViolation{std::move(U), std::move(W), terms};
        ++out.violations;
      }
    }
  });
  for (auto& c : results) {
    r.violations += c.violations;
    r.max_normalized_discrepancy = std::max(r.max_normalized_discrepancy, c.max_norm);
    r.max_bound_ratio = std::max(r.max_bound_ratio, c.max_ratio);
    if (!r.first_violation && c.first) r.first_violation = std::move(c.first);
  }
  return r;
}

struct SampledDraw {
  std::vector<Vertex> U;
  std::vector<Vertex> W;
  MixingTerms terms;
  double scale;
};

}  // namespace

std::vector<double> spectrum(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxSpectrumOrder)
    throw ResourceLimitError("spectrum: " + std::to_string(n) + " vertices exceeds the dense cap of " +
                             std::to_string(kMaxSpectrumOrder));
  std::vector<double> ev;
  if (n == 0) return ev;
  if (g.has_bipartition()) {
    auto x = g.side_vertices(0);
    auto y = g.side_vertices(1);
    if (x.size() > y.size()) std::swap(x, y);
    DenseMatrix m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const double c = static_cast<double>(common_neighbor_count(g, x[i], x[j]));
        m(i, j) = c;
        m(j, i) = c;
      }
    ev.reserve(n);
    for (double mu : symmetric_eigenvalues(std::move(m))) {
      const double s = std::sqrt(std::max(mu, 0.0));
      ev.push_back(s);
      ev.push_back(-s);
    }
    ev.resize(n, 0.0);
  } else {
    DenseMatrix a(n);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : g.neighbors(v)) a(v, u) = 1.0;
    ev = symmetric_eigenvalues(std::move(a));
  }
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

std::vector<double> spectrum_with_loops(const Graph& g, std::span<const Vertex> loops) {
  const std::size_t n = g.order();
  if (n > kMaxSpectrumOrder) throw ResourceLimitError("spectrum: vertex count exceeds the dense cap");
  DenseMatrix a(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) a(v, u) = 1.0;
  for (Vertex v : loops) {
    if (v >= n) throw PreconditionError("loop vertex out of range");
    a(v, v) = 1.0;
  }
  return symmetric_eigenvalues(std::move(a));
}

std::string mode_name(SpectralMode m) {
  return m == SpectralMode::Irregular ? "irregular" : "bipartite-regular";
}

SpectralMode parse_mode(const std::string& s) {
  if (s == "irregular") return SpectralMode::Irregular;
  if (s == "bipartite-regular" || s == "bipartite") return SpectralMode::BipartiteRegular;
  throw PreconditionError("unknown spectral mode '" + s + "'");
}

SpectralCertificate certify_from_spectrum(const Graph& g, const std::vector<double>& ev, SpectralMode mode,
                                          const CertificateThresholds& th) {
  if (ev.size() != g.order()) throw PreconditionError("spectrum length does not match the graph order");
  SpectralCertificate c;
  c.mode = mode;
  c.n = g.order();
  c.edges = g.size();
  c.degrees = g.degree_profile();
  c.thresholds = th;
  if (c.n == 0) return c;
  c.lambda_1 = ev.front();
  c.lambda_n = ev.back();
  if (c.n >= 2) {
    if (mode == SpectralMode::Irregular) {
      c.lambda = std::max(std::abs(ev[1]), std::abs(ev.back()));
    } else {
      c.lambda = std::max(ev[1], 0.0);
      double err = 0.0;
      for (std::size_t i = 0; i < c.n; ++i) err = std::max(err, std::abs(ev[i] + ev[c.n - 1 - i]));
      c.symmetry_error = err;
    }
  }
  const double spread = static_cast<double>(c.degrees.max_degree - c.degrees.min_degree);
  const double d = c.degrees.average();
  const double logn = std::log(static_cast<double>(c.n));
  c.R = c.lambda > 0 ? spread / c.lambda : 0.0;
  c.lambda_bar = (10.0 * c.R + 1.0) * c.lambda;

  auto ratios = [&](double lam, double& r2, double& r3) {
    const double dl = lam > 0 ? d / lam : kInf;
    r2 = dl / (logn * logn);
    r3 = std::log(d) * std::log(dl) / logn;
  };
  c.cond1_ratio = c.R;
  ratios(c.lambda, c.cond2_ratio, c.cond3_ratio);
  c.cond1_primed_slack = c.lambda_bar - spread;
  ratios(c.lambda_bar, c.cond2_primed_ratio, c.cond3_primed_ratio);

  c.cond1_pass = spread <= th.r_max * c.lambda;
  c.cond2_pass = c.cond2_ratio >= th.cond2_min;
  c.cond3_pass = c.cond3_ratio >= th.cond3_min;
  if (mode == SpectralMode::BipartiteRegular) {
    const double dl = c.lambda > 0 ? d / c.lambda : kInf;
    c.cond5_ratio = std::log(dl) / std::log(logn);
    c.cond6_ratio = c.cond3_ratio;
    c.cond5_pass = *c.cond5_ratio >= th.cond5_min;
    c.cond6_pass = *c.cond6_ratio >= th.cond6_min;
  }
  return c;
}

SpectralCertificate certify(const Graph& g, std::optional<SpectralMode> mode, const CertificateThresholds& th) {
  SpectralMode m;
  if (mode) {
    m = *mode;
  } else {
    m = g.has_bipartition() && g.degree_profile().regular() ? SpectralMode::BipartiteRegular
                                                            : SpectralMode::Irregular;
  }
  if (m == SpectralMode::BipartiteRegular) {
    if (!g.degree_profile().regular()) throw PreconditionError("bipartite-regular mode needs a regular graph");
    const Graph sided = with_sides(g);
    return certify_from_spectrum(sided, spectrum(sided), m, th);
  }
  return certify_from_spectrum(g, spectrum(g), m, th);
}

std::size_t ordered_edge_count(const Graph& g, const std::vector<Vertex>& U, const std::vector<Vertex>& W) {
  return edges_into(g, U, to_bits(g, W));
}

MixingTerms irregular_mixing_terms(const Graph& g, const std::vector<Vertex>& U, const std::vector<Vertex>& W,
                                   double lambda_bar) {
  const double n = static_cast<double>(g.order());
  const double d = g.degree_profile().average();
  const double u = static_cast<double>(U.size());
  const double w = static_cast<double>(W.size());
  const double e = static_cast<double>(ordered_edge_count(g, U, W));
  return {std::abs(e - d * u * w / n), lambda_bar * std::sqrt(u * w)};
}

MixingTerms bipartite_mixing_terms(const Graph& g, const std::vector<Vertex>& U, const std::vector<Vertex>& W,
                                   double lambda) {
  const double n = static_cast<double>(g.order());
  const double d = g.degree_profile().average();
  const double u = static_cast<double>(U.size());
  const double w = static_cast<double>(W.size());
  const double e = static_cast<double>(ordered_edge_count(g, U, W));
  return {std::abs(e - 2.0 * d * u * w / n), lambda * std::sqrt(u * w * (1.0 - u / n) * (1.0 - w / n))};
}

MixingReport verify_mixing_irregular(const Graph& g, double lambda_bar, std::size_t samples, std::uint64_t seed) {
  const auto all = all_vertices(g.order());
  return run_mixing(g, "irregular", lambda_bar, samples, seed, [&](Rng& rng) {
    auto U = sample_any_size(rng, all);
    auto W = sample_any_size(rng, all);
    const auto t = irregular_mixing_terms(g, U, W, lambda_bar);
    const double scale = std::sqrt(static_cast<double>(U.size()) * static_cast<double>(W.size()));
    return SampledDraw{std::move(U), std::move(W), t, scale};
  });
}

MixingReport verify_mixing_bipartite(const Graph& g, double lambda, std::size_t samples, std::uint64_t seed) {
  if (!is_regular_bipartite(g)) throw PreconditionError("bipartite mixing check needs a regular bipartite graph");
  const Graph sided = with_sides(g);
  const auto X = sided.side_vertices(0);
  const auto Y = sided.side_vertices(1);
  const double n = static_cast<double>(g.order());
  return run_mixing(sided, "bipartite", lambda, samples, seed, [&](Rng& rng) {
    auto U = sample_any_size(rng, X);
    auto W = sample_any_size(rng, Y);
    const auto t = bipartite_mixing_terms(sided, U, W, lambda);
    const double u = static_cast<double>(U.size());
    const double w = static_cast<double>(W.size());
    const double scale = std::sqrt(u * w * (1.0 - u / n) * (1.0 - w / n));
    return SampledDraw{std::move(U), std::move(W), t, scale};
  });
}

bool CorollaryReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CorollaryResult& r) { return r.failed == 0; });
}

namespace {

// One sampled predicate: returns nullopt when the draw could not produce an
// instance (e.g. no vertex outside U ∪ N(U)), otherwise whether it held.
using Check = std::function<std::optional<bool>(Rng&)>;

void run_check(CorollaryResult& r, std::size_t samples, std::uint64_t seed, const Check& check) {
  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::pair<std::size_t, std::size_t>> counts(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    Rng rng(derive_seed(seed, c));
    const std::size_t end = std::min(samples, (c + 1) * kChunk);
    for (std::size_t s = c * kChunk; s < end; ++s) {
      const auto ok = check(rng);
      if (!ok) continue;
      ++counts[c].first;
      if (!*ok) ++counts[c].second;
    }
  });
  for (auto [checked, failed] : counts) {
    r.checked += checked;
    r.failed += failed;
  }
}

bool within(double lhs, double rhs) { return lhs <= rhs + kMixingSlack * (1.0 + std::abs(rhs)); }
bool strictly_above(double lhs, double rhs) { return lhs > rhs - kMixingSlack * (1.0 + std::abs(rhs)); }

CorollaryResult vacuous(std::string name, std::string statement, std::string why) {
  CorollaryResult r;
  r.name = std::move(name);
  r.statement = std::move(statement);
  r.applicable = false;
  r.vacuous_reason = "hypothesis vacuous at this scale: " + std::move(why);
  return r;
}

}  // namespace

CorollaryReport verify_corollaries(const Graph& g0, const SpectralCertificate& cert, std::size_t samples,
                                   std::uint64_t seed) {
  CorollaryReport rep;
  rep.mode = cert.mode;
  rep.samples = samples;
  rep.seed = seed;
  const bool bip = cert.mode == SpectralMode::BipartiteRegular;
  const Graph g = bip ? with_sides(g0) : g0;
  const std::size_t n = g.order();
  if (n == 0) return rep;
  const double nd = static_cast<double>(n);
  const double d = cert.degrees.average();
  const double delta = static_cast<double>(cert.degrees.min_degree);
  // The bipartite statements use lambda, the irregular ones lambda_bar.
  const double L = bip ? cert.lambda : cert.lambda_bar;
  const auto all = all_vertices(n);
  std::uint64_t stream = 0;

  auto edges_in = [&](const std::vector<Vertex>& U) {
    return static_cast<double>(ordered_edge_count(g, U, U)) / 2.0;
  };
  auto outer_size = [&](const std::vector<Vertex>& U) { return static_cast<double>(popcount(outer_neighborhood(g, U))); };

  auto sized = [&](std::string name, std::string statement, long long lo, long long hi,
                   std::function<bool(const std::vector<Vertex>&)> pred) {
    const auto s = derive_seed(seed, ++stream);
    hi = std::min<long long>(hi, static_cast<long long>(n));
    lo = std::max<long long>(lo, 1);
    if (lo > hi) {
      rep.results.push_back(vacuous(std::move(name), std::move(statement), "no set size in the admissible range"));
      return;
    }
    CorollaryResult r;
    r.name = std::move(name);
    r.statement = std::move(statement);
    run_check(r, samples, s, [&](Rng& rng) -> std::optional<bool> {
      const auto k = uniform_in(rng, static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
      return pred(sample_subset(rng, all, k));
    });
    rep.results.push_back(std::move(r));
  };

  auto connectivity = [&](bool hypothesis, std::string why) {
    const std::string statement = "G is connected";
    if (!hypothesis) {
      rep.results.push_back(vacuous("connectivity", statement, std::move(why)));
      return;
    }
    CorollaryResult r;
    r.name = "connectivity";
    r.statement = statement;
    r.checked = 1;
    r.failed = is_connected(g) ? 0 : 1;
    rep.results.push_back(std::move(r));
  };

  if (!bip) {
    sized("edge_count_within_set", "|e(U) - d|U|^2/2n| <= lambda_bar |U| / 2", 1, static_cast<long long>(n),
          [&](const std::vector<Vertex>& U) {
            const double u = static_cast<double>(U.size());
            return within(std::abs(edges_in(U) - d * u * u / (2 * nd)), L * u / 2);
          });
    sized("small_set_sparsity", "|U| <= lambda_bar n / d  =>  e(U) <= lambda_bar |U|", 1, floor_tol(L * nd / d),
          [&](const std::vector<Vertex>& U) { return within(edges_in(U), L * static_cast<double>(U.size())); });

    const double gamma = 0.4 + 1.0 / std::sqrt(5.0);
    const std::string sse = "1 <= |U| <= 2 lambda_bar^2 n / d^2  =>  |N(U)| > (d - 2 lambda_bar)^2 / (5 lambda_bar^2) |U|";
    if (!(d > 2 * L && delta - 2 * L > gamma * (d - 2 * L))) {
      ++stream;
      rep.results.push_back(vacuous("small_set_expansion", sse,
                                    "needs d > 2 lambda_bar and delta - 2 lambda_bar > gamma (d - 2 lambda_bar)"));
    } else {
      const double factor = (d - 2 * L) * (d - 2 * L) / (5 * L * L);
      sized("small_set_expansion", sse, 1, floor_tol(2 * L * L * nd / (d * d)), [&](const std::vector<Vertex>& U) {
        return strictly_above(outer_size(U), factor * static_cast<double>(U.size()));
      });
    }
    sized("large_set_expansion", "|U| > 2 lambda_bar^2 n / d^2  =>  |N(U)| > n/2 - |U|",
          floor_tol(2 * L * L * nd / (d * d)) + 1, static_cast<long long>(n), [&](const std::vector<Vertex>& U) {
            return strictly_above(outer_size(U), nd / 2 - static_cast<double>(U.size()));
          });
    {
      CorollaryResult r;
      r.name = "nonadjacent_sets";
      r.statement = "U, W disjoint with no edge between them  =>  |U||W| < lambda_bar^2 n^2 / d^2";
      const double bound = L * L * nd * nd / (d * d);
      run_check(r, samples, derive_seed(seed, ++stream), [&](Rng& rng) -> std::optional<bool> {
        const auto U = sample_any_size(rng, all);
        auto rest = outer_neighborhood(g, U);
        for (Vertex u : U) rest[u >> 6] |= std::uint64_t{1} << (u & 63);
        std::vector<Vertex> pool;
        for (Vertex v = 0; v < n; ++v)
          if (!((rest[v >> 6] >> (v & 63)) & 1u)) pool.push_back(v);
        if (pool.empty()) return std::nullopt;
        const auto W = sample_any_size(rng, pool);
        return within(static_cast<double>(U.size()) * static_cast<double>(W.size()), bound);
      });
      rep.results.push_back(std::move(r));
    }
    connectivity(L < delta, "needs lambda_bar < delta");
  } else {
    const auto X = g.side_vertices(0);
    const auto Y = g.side_vertices(1);
    sized("edge_count_within_set", "e(U) <= d|U|^2/2n + lambda |U| / 2", 1, static_cast<long long>(n),
          [&](const std::vector<Vertex>& U) {
            const double u = static_cast<double>(U.size());
            return within(edges_in(U), d * u * u / (2 * nd) + L * u / 2);
          });
    sized("small_set_sparsity", "|U| <= lambda n / d  =>  e(U) <= lambda |U|", 1, floor_tol(L * nd / d),
          [&](const std::vector<Vertex>& U) { return within(edges_in(U), L * static_cast<double>(U.size())); });

    const std::string sse = "|U| < lambda^2 n / d^2  =>  |N(U)| > (d - 2 lambda)^2 / (4 lambda^2) |U|";
    if (!(d > 2 * L)) {
      ++stream;
      rep.results.push_back(vacuous("small_set_expansion", sse, "needs d > 2 lambda"));
    } else {
      const double factor = (d - 2 * L) * (d - 2 * L) / (4 * L * L);
      const double cap = L * L * nd / (d * d);
      const long long hi = static_cast<long long>(std::ceil(cap - 1e-9)) - 1;
      sized("small_set_expansion", sse, 1, hi, [&](const std::vector<Vertex>& U) {
        return strictly_above(outer_size(U), factor * static_cast<double>(U.size()));
      });
    }
    {
      const std::string statement = "S inside one side, |S| > lambda^2 n / d^2  =>  |N(S)| > n/4";
      const long long lo = floor_tol(L * L * nd / (d * d)) + 1;
      const auto s = derive_seed(seed, ++stream);
      const long long hi = static_cast<long long>(std::min(X.size(), Y.size()));
      if (std::max<long long>(lo, 1) > hi) {
        rep.results.push_back(vacuous("one_side_expansion", statement, "no set size in the admissible range"));
      } else {
        CorollaryResult r;
        r.name = "one_side_expansion";
        r.statement = statement;
        run_check(r, samples, s, [&](Rng& rng) -> std::optional<bool> {
          const auto& side = uniform_below(rng, 2) == 0 ? X : Y;
          const auto k = uniform_in(rng, static_cast<std::size_t>(std::max<long long>(lo, 1)), side.size());
          return strictly_above(outer_size(sample_subset(rng, side, k)), nd / 4);
        });
        rep.results.push_back(std::move(r));
      }
    }
    {
      CorollaryResult r;
      r.name = "nonadjacent_sides";
      r.statement = "S in X, T in Y with no edge between them  =>  |S||T| < lambda^2 n^2 / (4 d^2)";
      const double bound = L * L * nd * nd / (4 * d * d);
      run_check(r, samples, derive_seed(seed, ++stream), [&](Rng& rng) -> std::optional<bool> {
        const auto S = sample_any_size(rng, X);
        const auto nb = outer_neighborhood(g, S);
        std::vector<Vertex> pool;
        for (Vertex y : Y)
          if (!((nb[y >> 6] >> (y & 63)) & 1u)) pool.push_back(y);
        if (pool.empty()) return std::nullopt;
        const auto T = sample_any_size(rng, pool);
        return within(static_cast<double>(S.size()) * static_cast<double>(T.size()), bound);
      });
      rep.results.push_back(std::move(r));
    }
    connectivity(L < d, "needs lambda < d");
  }
  return rep;
}

}  // namespace pseudoham
