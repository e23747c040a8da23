#include "pseudoham/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "pseudoham/rng.hpp"

namespace pseudoham {

namespace {

std::vector<Vertex> canonical_cycle(std::vector<Vertex> c) {
  const auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() >= 3 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

class FactorEnumerator {
 public:
  FactorEnumerator(const Graph& g, const std::function<void(const TwoFactor&)>& visit, std::optional<std::size_t> filter)
      : g_(g), visit_(visit), filter_(filter), covered_(g.order(), 0) {}

  void run() { next_cycle(); }

 private:
  void next_cycle() {
    Vertex v = 0;
    while (v < g_.order() && covered_[v]) ++v;
    if (v == g_.order()) {
      if (!filter_ || current_.cycles.size() == *filter_) visit_(current_);
      return;
    }
    if (filter_ && current_.cycles.size() >= *filter_) return;
    covered_[v] = 1;
    path_.assign(1, v);
    for (Vertex u : g_.neighbors(v)) {
      if (covered_[u]) continue;
      covered_[u] = 1;
      emit({v, u});
      covered_[u] = 0;
    }
    extend(v);
    covered_[v] = 0;
  }

  // path_ starts at its smallest vertex; grow it and close it whenever the
  // closing edge exists and the orientation is the canonical one.
  void extend(Vertex start) {
    const Vertex last = path_.back();
    for (Vertex w : g_.neighbors(last)) {
      if (covered_[w]) continue;
      covered_[w] = 1;
      path_.push_back(w);
      if (path_.size() >= 3 && path_[1] < w && g_.adjacent(w, start)) emit(path_);
      extend(start);
      path_.pop_back();
      covered_[w] = 0;
    }
  }

  void emit(std::vector<Vertex> cycle) {
    const auto saved = path_;
    current_.cycles.push_back(std::move(cycle));
    next_cycle();
    current_.cycles.pop_back();
    path_ = saved;
  }

  const Graph& g_;
  const std::function<void(const TwoFactor&)>& visit_;
  std::optional<std::size_t> filter_;
  std::vector<char> covered_;
  std::vector<Vertex> path_;
  TwoFactor current_;
};

void check_order(const Graph& g, std::size_t cap, const char* what) {
  if (g.order() > cap)
    throw ResourceLimitError(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds " +
                             std::to_string(cap));
}

BigCount pow2(std::size_t k) { return BigCount::from_raw(uint128_t{1} << k); }

// Kuhn's augmenting-path matching on the bipartite double cover.
bool augment(const std::vector<std::vector<Vertex>>& adj, Vertex left, std::vector<Vertex>& match_right,
             std::vector<char>& seen) {
  for (Vertex r : adj[left]) {
    if (seen[r]) continue;
    seen[r] = 1;
    if (match_right[r] == UINT32_MAX || augment(adj, match_right[r], match_right, seen)) {
      match_right[r] = left;
      return true;
    }
  }
  return false;
}

bool trivially_cycle_free(const Graph& g) {
  if (g.order() < 3) return true;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < 2) return true;
  return !is_connected(g);
}

HamiltonCount count_by_dp(const Graph& g, const HamiltonCountOptions& opt) {
  const std::size_t n = g.order();
  // Key: subset of vertices 1..n-1 (bit v-1) shifted left 6, low bits the end.
  using State = std::pair<std::uint64_t, uint128_t>;
  std::vector<State> layer;
  for (Vertex v : g.neighbors(0)) layer.push_back({(std::uint64_t{1} << (v - 1)) << 6 | v, 1});
  std::sort(layer.begin(), layer.end());
  std::uint64_t work = layer.size();
  for (std::size_t size = 1; size + 1 < n; ++size) {
    std::vector<State> next;
    next.reserve(layer.size() * 2);
    for (const auto& [key, count] : layer) {
      const std::uint64_t mask = key >> 6;
      const auto end = static_cast<Vertex>(key & 63);
      for (Vertex w : g.neighbors(end)) {
        if (w == 0 || ((mask >> (w - 1)) & 1u)) continue;
        next.push_back({(mask | std::uint64_t{1} << (w - 1)) << 6 | w, count});
      }
      if (next.size() > opt.max_dp_states)
        throw CountLimitError("subset DP exceeded " + std::to_string(opt.max_dp_states) + " states at path size " +
                                  std::to_string(size + 1),
                              "subset-dp", work, BigCount(0));
    }
    std::sort(next.begin(), next.end(), [](const State& a, const State& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (out > 0 && next[out - 1].first == next[i].first) {
        next[out - 1].second += next[i].second;
      } else {
        next[out++] = next[i];
      }
    }
    next.resize(out);
    next.shrink_to_fit();
    work += out;
    layer = std::move(next);
  }
  uint128_t directed = 0;
  for (const auto& [key, count] : layer)
    if (g.adjacent(static_cast<Vertex>(key & 63), 0)) directed += count;
  return {BigCount::from_raw(directed / 2), "subset-dp", work};
}

class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.order()), budget_(budget), visited_(n_, 0), free_(n_, 0) {}

  HamiltonCount run() {
    // free_[w]: neighbours of w that can still be cycle neighbours of w, i.e.
    // unvisited vertices, the current end and the anchor 0.
    for (Vertex v = 0; v < n_; ++v) free_[v] = static_cast<int>(g_.degree(v));
    visited_[0] = 1;
    const Vertex max_anchor_nb = *std::max_element(g_.neighbors(0).begin(), g_.neighbors(0).end());
    for (Vertex a : g_.neighbors(0)) {
      if (a >= max_anchor_nb) continue;  // the closing neighbour must exceed a
      first_ = a;
      step_from(0, a, 2);
    }
    return {BigCount::from_raw(count_), "branch-and-bound", nodes_};
  }

 private:
  // Move the end from u (becomes interior) to v; `len` vertices on the path.
  void step_from(Vertex u, Vertex v, std::size_t len) {
    if (++nodes_ > budget_)
      throw CountLimitError("branch-and-bound exceeded " + std::to_string(budget_) + " search nodes", "branch-and-bound",
                            nodes_, BigCount::from_raw(count_));
    visited_[v] = 1;
    bool dead = false;
    if (u != 0) {
      for (Vertex w : g_.neighbors(u)) {
        --free_[w];
        if (!visited_[w] && free_[w] < 2) dead = true;
      }
    }
    if (!dead) {
      if (len == n_) {
        if (v > first_ && g_.adjacent(v, 0)) ++count_;
      } else {
        for (Vertex w : g_.neighbors(v))
          if (!visited_[w]) step_from(v, w, len + 1);
      }
    }
    if (u != 0)
      for (Vertex w : g_.neighbors(u)) ++free_[w];
    visited_[v] = 0;
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::vector<char> visited_;
  std::vector<int> free_;
  Vertex first_ = 0;
  uint128_t count_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::size_t TwoFactor::long_cycle_count() const {
  return static_cast<std::size_t>(
      std::count_if(cycles.begin(), cycles.end(), [](const auto& c) { return c.size() >= 3; }));
}

std::vector<Edge> TwoFactor::edge_multiset() const {
  std::vector<Edge> out;
  for (const auto& c : cycles) {
    if (c.size() == 2) {
      out.push_back(Edge{c[0], c[1]}.canonical());
      out.push_back(Edge{c[0], c[1]}.canonical());
      continue;
    }
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(Edge{c[i], c[(i + 1) % c.size()]}.canonical());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TwoFactor TwoFactor::canonical() const {
  TwoFactor f;
  for (const auto& c : cycles) f.cycles.push_back(canonical_cycle(c));
  std::sort(f.cycles.begin(), f.cycles.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return f;
}

bool is_two_factor(const Graph& g, const TwoFactor& f, std::string* why) {
  auto fail = [why](std::string s) {
    if (why) *why = std::move(s);
    return false;
  };
  std::vector<char> seen(g.order(), 0);
  std::size_t covered = 0;
  for (const auto& c : f.cycles) {
    if (c.size() < 2) return fail("cycle with fewer than two vertices");
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex v = c[i];
      if (v >= g.order()) return fail("vertex out of range");
      if (seen[v]) return fail("vertex " + std::to_string(v) + " covered twice");
      seen[v] = 1;
      ++covered;
      const Vertex w = c[(i + 1) % c.size()];
      if (w < g.order() && !g.adjacent(v, w))
        return fail("non-edge " + std::to_string(v) + "-" + std::to_string(w));
    }
  }
  if (covered != g.order()) return fail("not every vertex is covered");
  return true;
}

void enumerate_two_factors(const Graph& g, const std::function<void(const TwoFactor&)>& visit,
                           std::optional<std::size_t> s_filter) {
  check_order(g, kMaxTwoFactorOrder, "enumerate_two_factors");
  if (g.order() == 0) return;
  FactorEnumerator(g, visit, s_filter).run();
}

std::vector<TwoFactor> two_factors(const Graph& g, std::optional<std::size_t> s_filter) {
  std::vector<TwoFactor> out;
  enumerate_two_factors(g, [&](const TwoFactor& f) { out.push_back(f); }, s_filter);
  return out;
}

OrientedIdentity oriented_count_identity(const Graph& g) {
  check_order(g, kMaxIdentityOrder, "oriented_count_identity");
  OrientedIdentity r;
  r.permanent = permanent_exact(BinaryMatrix::adjacency(g));
  enumerate_two_factors(g, [&](const TwoFactor& f) { r.oriented_sum += pow2(f.long_cycle_count()); });
  r.equal = r.permanent == r.oriented_sum;
  return r;
}

FactorHistogram f_histogram(const Graph& g) {
  check_order(g, kMaxTwoFactorOrder, "f_histogram");
  FactorHistogram h;
  enumerate_two_factors(g, [&](const TwoFactor& f) {
    h.by_cycles[f.cycle_count()] += BigCount(1);
    h.by_long_cycles[f.long_cycle_count()] += BigCount(1);
    h.total += BigCount(1);
    h.weighted_by_long += pow2(f.long_cycle_count());
    h.weighted_by_all += pow2(f.cycle_count());
  });
  return h;
}

std::optional<TwoFactor> random_two_factor(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.order();
  Rng rng(seed);
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    shuffle_in_place(rng, std::span<Vertex>(adj[v]));
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  shuffle_in_place(rng, std::span<Vertex>(order));
  std::vector<Vertex> match_right(n, UINT32_MAX);
  std::vector<char> seen(n);
  for (Vertex left : order) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(adj, left, match_right, seen)) return std::nullopt;
  }
  std::vector<Vertex> sigma(n);
  for (Vertex r = 0; r < n; ++r) sigma[match_right[r]] = r;
  TwoFactor f;
  std::vector<char> done(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (done[s]) continue;
    std::vector<Vertex> cycle;
    for (Vertex v = s; !done[v]; v = sigma[v]) {
      done[v] = 1;
      cycle.push_back(v);
    }
    f.cycles.push_back(std::move(cycle));
  }
  return f.canonical();
}

HamiltonCount count_hamilton_cycles(const Graph& g, const HamiltonCountOptions& opt) {
  const std::size_t n = g.order();
  const bool dp_ok = n <= kMaxDpOrder;
  const bool search_ok = n <= kMaxSearchOrder;
  if (opt.method == CountMethod::SubsetDp && !dp_ok) check_order(g, kMaxDpOrder, "subset DP");
  if (!search_ok) check_order(g, kMaxSearchOrder, "count_hamilton_cycles");
  if (trivially_cycle_free(g)) return {BigCount(0), "trivial", 0};
  if (opt.method == CountMethod::SubsetDp) return count_by_dp(g, opt);
  if (opt.method == CountMethod::BranchAndBound) return CycleSearch(g, opt.max_search_nodes).run();
  if (dp_ok) {
    try {
      return count_by_dp(g, opt);
    } catch (const CountLimitError&) {
    }
  }
  return CycleSearch(g, opt.max_search_nodes).run();
}

FormulaGap formula_gap(const Graph& g, const BigCount& h) {
  FormulaGap r;
  r.n = g.order();
  const double n = static_cast<double>(r.n);
  const double d = g.degree_profile().average();
  r.average_degree = d;
  r.log_h = h.log();
  r.log_formula = std::lgamma(n + 1.0) + n * std::log(d / n);
  r.gap_per_vertex = n > 0 ? (r.log_h - r.log_formula) / n : 0.0;
  r.log_lower_diagnostic = n * (std::log(d) - 1.0) + std::lgamma(n + 1.0) - n * std::log(n);
  const auto a = BinaryMatrix::adjacency(g);
  r.log_bregman = bregman_bound(a);
  if (r.n <= kMaxRyserOrder) r.log_permanent = permanent_exact(a).log();
  r.upper_chain = permanent_upper_chain(r.n, d);
  const double tol = 1e-9 * (1.0 + std::abs(r.log_h));
  r.below_bregman = r.log_h <= r.log_bregman + tol;
  r.below_chain = std::all_of(r.upper_chain.steps.begin(), r.upper_chain.steps.end(),
                              [&](const ChainStep& s) { return r.log_h <= s.log_value + tol; });
  if (r.log_permanent) r.below_permanent = r.log_h <= *r.log_permanent + tol;
  return r;
}

}  // namespace pseudoham
