#include "pseudoham/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <queue>

#include "pseudoham/error.hpp"

namespace pseudoham {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kFlowEps = 1e-12;

double log_factorial(double k) { return std::lgamma(k + 1.0); }

struct FlowEdge {
  std::size_t to;
  double cap;
  std::size_t rev;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  void add(std::size_t u, std::size_t v, double cap) {
    adj_[u].push_back({v, cap, adj_[v].size()});
    adj_[v].push_back({u, 0.0, adj_[u].size() - 1});
  }

  // Edmonds-Karp: shortest augmenting paths.
  double max_flow(std::size_t s, std::size_t t) {
    double total = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> parent(adj_.size());
    for (;;) {
      std::fill(parent.begin(), parent.end(), std::pair{SIZE_MAX, SIZE_MAX});
      parent[s] = {s, 0};
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty() && parent[t].first == SIZE_MAX) {
        const auto u = q.front();
        q.pop();
        for (std::size_t k = 0; k < adj_[u].size(); ++k) {
          const auto& e = adj_[u][k];
          if (e.cap > kFlowEps && parent[e.to].first == SIZE_MAX) {
            parent[e.to] = {u, k};
            q.push(e.to);
          }
        }
      }
      if (parent[t].first == SIZE_MAX) break;
      double push = std::numeric_limits<double>::infinity();
      for (auto v = t; v != s; v = parent[v].first) push = std::min(push, adj_[parent[v].first][parent[v].second].cap);
      for (auto v = t; v != s; v = parent[v].first) {
        auto& e = adj_[parent[v].first][parent[v].second];
        e.cap -= push;
        adj_[v][e.rev].cap += push;
      }
      total += push;
    }
    return total;
  }

  std::vector<char> reachable(std::size_t s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (const auto& e : adj_[u])
        if (e.cap > kFlowEps && !seen[e.to]) {
          seen[e.to] = 1;
          stack.push_back(e.to);
        }
    }
    return seen;
  }

 private:
  std::vector<std::vector<FlowEdge>> adj_;
};

bool relation_holds(const std::string& rel, double prev, double cur) {
  if (std::isinf(prev) && std::isinf(cur) && prev == cur) return true;
  const double tol = 1e-9 * (1.0 + std::max(std::abs(std::isfinite(prev) ? prev : 0.0),
                                            std::abs(std::isfinite(cur) ? cur : 0.0)));
  if (rel == ">=") return prev >= cur - tol;
  if (rel == "<=") return prev <= cur + tol;
  return std::abs(prev - cur) <= tol;
}

void push_step(ChainReport& r, std::string expr, std::string rel, double value) {
  ChainStep s{std::move(expr), std::move(rel), value, true};
  if (!r.steps.empty()) s.holds = relation_holds(s.relation, r.steps.back().log_value, value);
  r.steps.push_back(std::move(s));
  r.final_log = value;
}

}  // namespace

BinaryMatrix BinaryMatrix::adjacency(const Graph& g) {
  BinaryMatrix m(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v)) m.set(v, u, true);
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  BinaryMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw PreconditionError("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) throw PreconditionError("matrix entry is not 0 or 1");
      m.set(i, j, rows[i][j] == 1);
    }
  }
  return m;
}

std::size_t BinaryMatrix::ones() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

std::size_t BinaryMatrix::row_sum(std::size_t i) const {
  return static_cast<std::size_t>(std::count(cells_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                                             cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_),
                                             std::uint8_t{1}));
}

DenseMatrix BinaryMatrix::to_dense(double scale) const {
  DenseMatrix d(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) d(i, j) = scale;
  return d;
}

BigCount permanent_exact(const BinaryMatrix& m) {
  const std::size_t n = m.size();
  if (n > kMaxRyserOrder)
    throw ResourceLimitError("permanent_exact: order " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxRyserOrder));
  if (n == 0) return BigCount(1);
  // Row sums over the current column subset, one column toggled per step.
  std::vector<std::int64_t> sums(n, 0);
  // Terms are at most n^n < 2^128 for n <= 24; the signed total is the
  // permanent (< 2^128), so wrapping unsigned arithmetic is exact.
  uint128_t acc = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < limit; ++k) {
    const auto j = static_cast<std::size_t>(std::countr_zero(k));
    gray ^= std::uint64_t{1} << j;
    const bool added = (gray >> j) & 1u;
    for (std::size_t i = 0; i < n; ++i)
      if (m.get(i, j)) sums[i] += added ? 1 : -1;
    uint128_t prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= static_cast<uint128_t>(sums[i]);
    if ((std::popcount(gray) & 1) == static_cast<int>(n & 1)) {
      acc += prod;
    } else {
      acc -= prod;
    }
  }
  return BigCount::from_raw(acc);
}

double permanent_real(const DenseMatrix& m) {
  const std::size_t n = m.size();
  if (n > kMaxRyserOrder)
    throw ResourceLimitError("permanent_real: order " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxRyserOrder));
  if (n == 0) return 1.0;
  std::vector<long double> sums(n, 0.0L);
  long double acc = 0.0L;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < limit; ++k) {
    const auto j = static_cast<std::size_t>(std::countr_zero(k));
    gray ^= std::uint64_t{1} << j;
    const long double sign = ((gray >> j) & 1u) ? 1.0L : -1.0L;
    for (std::size_t i = 0; i < n; ++i) sums[i] += sign * m(i, j);
    long double prod = 1.0L;
    for (std::size_t i = 0; i < n; ++i) prod *= sums[i];
    acc += (std::popcount(gray) & 1) == static_cast<int>(n & 1) ? prod : -prod;
  }
  return static_cast<double>(acc);
}

DenseMatrix sinkhorn_normalize(DenseMatrix m, double tolerance, std::size_t max_rounds) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(m(i, j) > 0.0)) throw PreconditionError("sinkhorn_normalize needs strictly positive entries");
  for (std::size_t round = 0; round < max_rounds; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j);
      for (std::size_t j = 0; j < n; ++j) m(i, j) /= s;
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += m(i, j);
      for (std::size_t i = 0; i < n; ++i) m(i, j) /= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j);
      worst = std::max(worst, std::abs(s - 1.0));
    }
    if (worst <= tolerance) return m;
  }
  return m;
}

double bregman_bound(std::size_t n, std::size_t t) {
  if (n == 0) return 0.0;
  if (t < n) return kNegInf;
  const std::size_t lo = t / n;
  const std::size_t high_count = t - n * lo;
  const double flo = static_cast<double>(lo);
  double total = static_cast<double>(n - high_count) * log_factorial(flo) / flo;
  if (high_count > 0) total += static_cast<double>(high_count) * log_factorial(flo + 1) / (flo + 1);
  return total;
}

double bregman_bound(const BinaryMatrix& m) { return bregman_bound(m.size(), m.ones()); }

double minc_row_bound(const BinaryMatrix& m) {
  double total = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto r = m.row_sum(i);
    if (r == 0) return kNegInf;
    total += log_factorial(static_cast<double>(r)) / static_cast<double>(r);
  }
  return total;
}

double van_der_waerden_log(std::size_t n) {
  if (n == 0) return 0.0;
  const double dn = static_cast<double>(n);
  return log_factorial(dn) - dn * std::log(dn);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::NotApplicable:
      break;
  }
  return "not-applicable";
}

SuperstochasticResult is_doubly_superstochastic(const DenseMatrix& m) {
  const std::size_t n = m.size();
  SuperstochasticResult r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(m(i, j) >= 0.0)) throw PreconditionError("superstochastic test needs nonnegative entries");
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    net.add(source, i, 1.0);
    net.add(n + i, sink, 1.0);
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) > 0.0) net.add(i, n + j, m(i, j));
  }
  r.max_flow = net.max_flow(source, sink);
  const double nd = static_cast<double>(n);
  if (r.max_flow >= nd - 1e-9 * (1.0 + nd)) {
    r.verdict = Verdict::Yes;
    return r;
  }
  r.verdict = Verdict::No;
  const auto seen = net.reachable(source);
  for (std::size_t i = 0; i < n; ++i)
    if (seen[i]) r.witness_rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j)
    if (!seen[n + j]) r.witness_cols.push_back(j);
  for (auto i : r.witness_rows)
    for (auto j : r.witness_cols) r.witness_sum += m(i, j);
  r.witness_required = static_cast<double>(r.witness_rows.size() + r.witness_cols.size()) - nd;
  r.reason = "min cut below n";
  return r;
}

SuperstochasticResult scaled_superstochastic_check(const Graph& g, double divisor) {
  if (!(divisor > 0.0)) throw PreconditionError("scaling divisor must be positive");
  auto r = is_doubly_superstochastic(BinaryMatrix::adjacency(g).to_dense(1.0 / divisor));
  r.divisor = divisor;
  return r;
}

SuperstochasticResult scaled_superstochastic_check(const Graph& g, const SpectralCertificate& cert) {
  const double divisor = static_cast<double>(cert.degrees.min_degree) - 9.0 * cert.lambda_bar;
  if (!(divisor > 0.0)) {
    SuperstochasticResult r;
    r.verdict = Verdict::NotApplicable;
    r.divisor = divisor;
    r.reason = "not applicable at this scale: delta - 9 lambda_bar = " + std::to_string(divisor) + " <= 0";
    return r;
  }
  return scaled_superstochastic_check(g, divisor);
}

bool ChainReport::monotone() const {
  return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.holds; });
}

ChainReport permanent_lower_chain(std::size_t n_, double delta, double Delta, double lambda_bar) {
  const double base = delta - 9.0 * lambda_bar;
  if (!(base > 0.0)) throw PreconditionError("lower chain needs delta - 9 lambda_bar > 0");
  const double n = static_cast<double>(n_);
  const double head = n * (std::log(Delta) - 1.0);
  const double ratio = 1.0 - 10.0 * lambda_bar / Delta;
  const double logn = std::log(n);
  const double logD = std::log(Delta);
  ChainReport r;
  push_step(r, "((delta - 9 lambda_bar)/e)^n", "", n * (std::log(base) - 1.0));
  push_step(r, "((Delta - 10 lambda_bar)/e)^n", ">=",
            Delta - 10.0 * lambda_bar > 0 ? n * (std::log(Delta - 10.0 * lambda_bar) - 1.0) : kNegInf);
  push_step(r, "(Delta/e)^n (1 - 10 lambda_bar/Delta)^n", "=", ratio > 0 ? head + n * std::log(ratio) : kNegInf);
  push_step(r, "(Delta/e)^n (1/(2e))^(10 lambda_bar n/Delta)", ">=",
            head - 10.0 * lambda_bar * n / Delta * (1.0 + std::log(2.0)));
  push_step(r, "(Delta/e)^n exp(-10(1 + log 2) n/log^2 n)", ">=", head - 10.0 * (1.0 + std::log(2.0)) * n / (logn * logn));
  push_step(r, "(Delta/e)^n exp(-20n/log^2 Delta)", ">=", head - 20.0 * n / (logD * logD));
  return r;
}

ChainReport permanent_lower_chain(const Graph& g, const SpectralCertificate& cert) {
  return permanent_lower_chain(g.order(), static_cast<double>(cert.degrees.min_degree),
                               static_cast<double>(cert.degrees.max_degree), cert.lambda_bar);
}

ChainReport permanent_upper_chain(std::size_t n_, double d) {
  if (!(d >= 1.0)) throw PreconditionError("upper chain needs average degree >= 1");
  const double n = static_cast<double>(n_);
  const double c = std::ceil(d);
  ChainReport r;
  push_step(r, "(ceil(d)!)^(n/floor(d))", "", n / std::floor(d) * log_factorial(c));
  if (d > 1.0 && c >= 2.0) {
    const double e = n / (d - 1.0);
    push_step(r, "(c (c-1) ((c-1)/e)^(c-1))^(n/(d-1)), c = ceil(d)", "<=",
              e * (std::log(c) + std::log(c - 1.0) + (c - 1.0) * (std::log(c - 1.0) - 1.0)));
    push_step(r, "((d+1)^2 (d/e)^d)^(n/(d-1))", "<=", e * (2.0 * std::log(d + 1.0) + d * (std::log(d) - 1.0)));
    push_step(r, "(d/e)^n [(d/e)^(n/(d-1)) (d+1)^(2n/(d-1))]", "=",
              n * (std::log(d) - 1.0) + e * (std::log(d) - 1.0) + 2.0 * e * std::log(d + 1.0));
  }
  return r;
}

PermanentBounds permanent_bounds(const BinaryMatrix& m, bool exact) {
  PermanentBounds b;
  b.n = m.size();
  b.ones = m.ones();
  if (exact && b.n <= kMaxRyserOrder) b.exact = permanent_exact(m);
  b.bregman_log = bregman_bound(m);
  b.minc_row_log = minc_row_bound(m);
  if (b.n > 0) {
    const std::size_t r = m.row_sum(0);
    bool regular = r > 0;
    for (std::size_t i = 0; i < b.n && regular; ++i) {
      std::size_t col = 0;
      for (std::size_t k = 0; k < b.n; ++k) col += m.get(k, i) ? 1 : 0;
      regular = m.row_sum(i) == r && col == r;
    }
    if (regular)
      b.vdw_log = static_cast<double>(b.n) * std::log(static_cast<double>(r)) + van_der_waerden_log(b.n);
  }
  b.superstochastic = is_doubly_superstochastic(m.to_dense());
  return b;
}

}  // namespace pseudoham
