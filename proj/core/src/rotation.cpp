#include "pseudoham/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <unordered_set>

#include "pseudoham/error.hpp"
#include "pseudoham/rng.hpp"

namespace pseudoham {

namespace {

constexpr std::size_t kOnPath = SIZE_MAX;

Replacement remove_edge(Vertex a, Vertex b) { return {Edge{a, b}.canonical(), std::nullopt}; }
Replacement swap_edge(Vertex ra, Vertex rb, Vertex aa, Vertex ab) {
  return {Edge{ra, rb}.canonical(), Edge{aa, ab}.canonical()};
}

class Attempt {
 public:
  Attempt(const Graph& g, const TwoFactor& f, std::size_t budget, std::vector<std::vector<Vertex>> nb,
          std::size_t main_cycle)
      : g_(g), n_(g.order()), budget_(budget), nb_(std::move(nb)), cycles_(f.cycles), cycle_of_(n_, kOnPath),
        pos_(n_, -1), main_(main_cycle) {
    for (std::size_t c = 0; c < cycles_.size(); ++c)
      for (Vertex v : cycles_[c]) cycle_of_[v] = c;
    remaining_ = cycles_.size() - 1;
  }

  bool run() {
    const auto& first = cycles_[main_];
    trace_.start = first.front();
    for (Vertex v : first) cycle_of_[v] = kOnPath;
    if (remaining_ == 0) {
      trace_.result = first;
      return true;
    }
    if (!open_and_merge(first)) return false;
    while (true) {
      const Vertex s = path_.front();
      const Vertex e = path_.back();
      if (remaining_ == 0 && g_.adjacent(s, e)) {
        trace_.replacements.push_back({std::nullopt, Edge{s, e}.canonical()});
        trace_.result = path_;
        return true;
      }
      if (const auto y = pending_neighbor(e)) {
        absorb(*y);
        continue;
      }
      const auto found = search();
      if (!found) return false;
      if (found->second) {
        absorb(*found->second);
        continue;
      }
      // closed into a cycle with cycles still pending: reopen next to one
      trace_.replacements.push_back({std::nullopt, Edge{path_.front(), path_.back()}.canonical()});
      if (remaining_ == 0) {
        trace_.result = path_;
        return true;
      }
      const auto cycle = path_;
      if (!open_and_merge(cycle)) return false;
    }
  }

  RotationTrace& trace() { return trace_; }
  const std::string& failure() const { return failure_; }

 private:
  struct Node {
    std::vector<Vertex> path;
    std::size_t parent;
    Replacement op;
  };

  std::optional<Vertex> pending_neighbor(Vertex v) const {
    for (Vertex w : nb_[v])
      if (cycle_of_[w] != kOnPath) return w;
    return std::nullopt;
  }

  // Cuts the cycle next to a vertex with a neighbour on a pending cycle and
  // joins that cycle to the resulting path.
  bool open_and_merge(const std::vector<Vertex>& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex v = cycle[i];
      const auto w = pending_neighbor(v);
      if (!w) continue;
      const std::size_t len = cycle.size();
      path_.clear();
      for (std::size_t k = 1; k <= len; ++k) path_.push_back(cycle[(i + k) % len]);
      trace_.replacements.push_back(remove_edge(v, cycle[(i + 1) % len]));
      absorb(*w);
      return true;
    }
    failure_ = "no edge leaves the current cycle; the graph is disconnected";
    return false;
  }

  // Appends the pending cycle through y to the path end, cutting the cycle at y.
  void absorb(Vertex y) {
    const Vertex e = path_.back();
    const std::size_t c = cycle_of_[y];
    const auto& d = cycles_[c];
    const std::size_t len = d.size();
    const std::size_t j = static_cast<std::size_t>(std::find(d.begin(), d.end(), y) - d.begin());
    const Vertex after = d[(j + 1) % len];
    trace_.replacements.push_back(swap_edge(y, after, e, y));
    for (std::size_t k = 0; k < len; ++k) {
      const Vertex v = d[(j + len - k) % len];
      path_.push_back(v);
      cycle_of_[v] = kOnPath;
    }
    --remaining_;
    ++trace_.merges;
    trace_.merge_path_lengths.push_back(path_.size() - 1);
    rotations_ = 0;
  }

  // Breadth-first Posa rotations from path_. On success path_ and the trace are
  // updated and the result says whether the end now has a pending neighbour
  // (the vertex) or closes onto the start (nullopt).
  std::optional<std::pair<bool, std::optional<Vertex>>> search() {
    std::vector<Node> arena;
    arena.push_back({path_, kOnPath, {}});
    std::deque<std::size_t> fixed{0};
    std::deque<std::size_t> reversed;
    std::unordered_set<std::uint64_t> seen;
    auto key = [this](const std::vector<Vertex>& p) {
      return static_cast<std::uint64_t>(p.front()) * n_ + p.back();
    };
    seen.insert(key(path_));
    bool budget_hit = false;
    while (!budget_hit && (!fixed.empty() || !reversed.empty())) {
      const bool phase_one = !fixed.empty();
      auto& queue = phase_one ? fixed : reversed;
      const std::size_t i = queue.front();
      queue.pop_front();
      std::vector<Vertex> q = std::move(arena[i].path);
      const Vertex s = q.front();
      const Vertex e = q.back();
      std::optional<Vertex> hit;
      bool closes = false;
      for (Vertex x : nb_[e]) {
        if (cycle_of_[x] != kOnPath) {
          hit = x;
          break;
        }
      }
      if (!hit && q.size() >= 3)
        closes = std::find(nb_[e].begin(), nb_[e].end(), s) != nb_[e].end();
      if (hit || closes) {
        commit(arena, i, std::move(q));
        return std::make_pair(true, hit);
      }
      if (phase_one) {
        std::vector<Vertex> back(q.rbegin(), q.rend());
        if (seen.insert(key(back)).second) {
          arena.push_back({std::move(back), i, {}});
          reversed.push_back(arena.size() - 1);
        }
      }
      for (std::size_t k = 0; k < q.size(); ++k) pos_[q[k]] = static_cast<std::ptrdiff_t>(k);
      const Vertex pred = q[q.size() - 2];
      for (Vertex x : nb_[e]) {
        if (x == pred || x == s) continue;
        const auto p = static_cast<std::size_t>(pos_[x]);
        std::vector<Vertex> r = q;
        std::reverse(r.begin() + static_cast<std::ptrdiff_t>(p) + 1, r.end());
        if (!seen.insert(key(r)).second) continue;
        if (rotations_ >= budget_) {
          budget_hit = true;
          break;
        }
        ++rotations_;
        ++trace_.rotations;
        arena.push_back({std::move(r), i, swap_edge(x, q[p + 1], x, e)});
        (phase_one ? fixed : reversed).push_back(arena.size() - 1);
      }
      for (Vertex v : q) pos_[v] = -1;
    }
    failure_ = budget_hit ? "rotation budget of " + std::to_string(budget_) + " exhausted after " +
                                std::to_string(trace_.merges) + " merges"
                          : "rotation endpoints exhausted after " + std::to_string(trace_.merges) + " merges";
    return std::nullopt;
  }

  void commit(const std::vector<Node>& arena, std::size_t i, std::vector<Vertex> path) {
    std::vector<Replacement> ops;
    for (std::size_t k = i; k != kOnPath; k = arena[k].parent)
      if (arena[k].op.removed || arena[k].op.added) ops.push_back(arena[k].op);
    trace_.replacements.insert(trace_.replacements.end(), ops.rbegin(), ops.rend());
    path_ = std::move(path);
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t budget_;
  std::vector<std::vector<Vertex>> nb_;
  std::vector<std::vector<Vertex>> cycles_;
  std::vector<std::size_t> cycle_of_;
  std::vector<std::ptrdiff_t> pos_;
  std::size_t main_;
  std::size_t remaining_ = 0;
  std::size_t rotations_ = 0;
  std::vector<Vertex> path_;
  RotationTrace trace_;
  std::string failure_;
};

}  // namespace

std::size_t rotation_budget(std::size_t n, double d, double lambda_bar) {
  const double ln = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  const double gain = lambda_bar > 0.0 ? std::max(std::log(d / lambda_bar), 0.1) : std::max(std::log(d), 0.1);
  return 50 * static_cast<std::size_t>(std::ceil(ln / gain));
}

RotationOutcome rotate_to_hamilton(const Graph& g, const TwoFactor& f, std::size_t budget, std::uint64_t seed,
                                   std::size_t restarts) {
  std::string why;
  if (!is_two_factor(g, f, &why)) throw PreconditionError("rotate_to_hamilton: not a 2-factor: " + why);
  RotationOutcome out;
  out.trace.budget = budget;
  if (g.order() < 3) {
    out.failure = "no Hamilton cycle on fewer than 3 vertices";
    return out;
  }
  if (!is_connected(g)) {
    out.failure = "graph is disconnected";
    return out;
  }
  const TwoFactor start = f.canonical();
  std::size_t longest = 0;
  for (std::size_t c = 1; c < start.cycles.size(); ++c)
    if (start.cycles[c].size() > start.cycles[longest].size()) longest = c;
  for (std::size_t a = 0; a <= restarts; ++a) {
    std::vector<std::vector<Vertex>> nb(g.order());
    for (Vertex v = 0; v < g.order(); ++v) nb[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    std::size_t main_cycle = longest;
    if (a > 0) {
      Rng rng(derive_seed(seed, a));
      for (auto& list : nb) shuffle_in_place(rng, std::span<Vertex>(list));
      main_cycle = static_cast<std::size_t>(uniform_below(rng, start.cycles.size()));
    }
    Attempt attempt(g, start, budget, std::move(nb), main_cycle);
    ++out.attempts;
    const bool ok = attempt.run();
    if (ok) {
      out.success = true;
      out.trace = std::move(attempt.trace());
      out.trace.budget = budget;
      out.trace.restarts = a;
      out.failure.clear();
      return out;
    }
    out.failure = attempt.failure();
  }
  out.trace.restarts = restarts;
  return out;
}

RotationOutcome rotate_to_hamilton(const Graph& g, const TwoFactor& f, const SpectralCertificate& cert,
                                   std::uint64_t seed, std::size_t restarts) {
  return rotate_to_hamilton(g, f, rotation_budget(g.order(), cert.degrees.average(), cert.lambda_bar), seed,
                            restarts);
}

bool is_hamilton_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t n = g.order();
  if (n < 3 || cycle.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = cycle[i];
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
    if (!g.adjacent(v, cycle[(i + 1) % n])) return false;
  }
  return true;
}

bool replay_trace(const Graph& g, const TwoFactor& f, const RotationTrace& trace, std::string* why) {
  auto fail = [why](std::string s) {
    if (why) *why = std::move(s);
    return false;
  };
  std::map<Edge, std::size_t> edges;
  for (const Edge& e : f.edge_multiset()) ++edges[e];
  for (std::size_t k = 0; k < trace.replacements.size(); ++k) {
    const auto& r = trace.replacements[k];
    if (r.removed) {
      auto it = edges.find(r.removed->canonical());
      if (it == edges.end())
        return fail("replacement " + std::to_string(k) + " removes an edge that is not present");
      if (--it->second == 0) edges.erase(it);
    }
    if (r.added) {
      if (r.added->u >= g.order() || r.added->v >= g.order() || !g.adjacent(r.added->u, r.added->v))
        return fail("replacement " + std::to_string(k) + " adds a non-edge");
      ++edges[r.added->canonical()];
    }
  }
  if (!is_hamilton_cycle(g, trace.result)) return fail("result is not a Hamilton cycle");
  std::map<Edge, std::size_t> expected;
  const std::size_t n = trace.result.size();
  for (std::size_t i = 0; i < n; ++i) ++expected[Edge{trace.result[i], trace.result[(i + 1) % n]}.canonical()];
  if (edges != expected) return fail("replayed edge set differs from the result cycle");
  return true;
}

}  // namespace pseudoham
