#include "pseudoham/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "pseudoham/error.hpp"

namespace pseudoham {

namespace {

double log_half_factorial(std::size_t n) { return std::lgamma(static_cast<double>(n) + 1.0) - std::log(2.0); }

std::string fraction(long num, long den) {
  const long g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

Graph path_union(std::size_t n, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  const auto ea = path_edges(a);
  const auto eb = path_edges(b);
  return edge_union(n, ea, eb);
}

Graph relation_graph(const std::vector<std::vector<Vertex>>& paths, std::size_t n, const TargetGraph& target,
                     bool want_contains) {
  GraphBuilder b(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j)
      if (contains_target(path_union(n, paths[i], paths[j]), target) == want_contains)
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return b.build();
}

// Relabelling the vertices of K_n permutes the Hamilton paths transitively and
// preserves both relations. A clique with at least two members contains an
// edge; sorting edge orbits, the search for each orbit fixes one
// representative edge {0, v} and forbids every edge of the orbits already
// done.
CliqueResult symmetric_max_clique(const Graph& g, const std::vector<std::vector<Vertex>>& paths,
                                  std::uint64_t node_budget) {
  const std::size_t count = paths.size();
  const std::size_t n = paths.front().size();
  // A short unproven search first, for a good incumbent.
  CliqueResult best = max_clique(g, std::min<std::uint64_t>(node_budget, 100'000));
  best.proven_optimal = true;
  if (count < 2) return best;
  std::map<std::vector<Vertex>, Vertex> index;
  for (std::size_t i = 0; i < count; ++i) index[paths[i]] = static_cast<Vertex>(i);
  auto lookup = [&](std::vector<Vertex> p) {
    if (p.front() > p.back()) std::reverse(p.begin(), p.end());
    return index.at(p);
  };
  // image of q under the relabelling taking p to path 0 (or to its reverse)
  auto image = [&](const std::vector<Vertex>& p, const std::vector<Vertex>& q, bool flip) {
    std::vector<Vertex> to(n);
    for (std::size_t k = 0; k < n; ++k) to[p[k]] = static_cast<Vertex>(flip ? n - 1 - k : k);
    std::vector<Vertex> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = to[q[k]];
    return lookup(out);
  };
  std::vector<std::uint32_t> orbit(count * count, 0);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      const Vertex key = std::min({image(paths[i], paths[j], false), image(paths[i], paths[j], true),
                                   image(paths[j], paths[i], false), image(paths[j], paths[i], true)});
      orbit[i * count + j] = orbit[j * count + i] = key;
    }
  std::vector<char> done(count, 0);  // indexed by representative v of the orbit {0, v}
  for (Vertex v : g.neighbors(0)) {
    if (orbit[v] != v) continue;  // not the representative of its orbit
    std::vector<Vertex> cand;
    for (Vertex w : g.neighbors(0))
      if (w != v && g.adjacent(v, w) && !done[orbit[w]] && !done[orbit[v * count + w]]) cand.push_back(w);
    if (2 + cand.size() > best.vertices.size()) {
      GraphBuilder b(cand.size());
      for (std::size_t a = 0; a < cand.size(); ++a)
        for (std::size_t c = a + 1; c < cand.size(); ++c)
          if (g.adjacent(cand[a], cand[c]) && !done[orbit[cand[a] * count + cand[c]]])
            b.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(c));
      const std::size_t exceed = best.vertices.size() >= 2 ? best.vertices.size() - 2 : 0;
      const auto sub = max_clique(b.build(), node_budget, exceed);
      best.nodes += sub.nodes;
      best.proven_optimal = best.proven_optimal && sub.proven_optimal;
      if (!sub.vertices.empty() || best.vertices.size() < 2) {
        best.vertices = {0, v};
        for (Vertex x : sub.vertices) best.vertices.push_back(cand[x]);
      }
    }
    done[v] = 1;
  }
  std::sort(best.vertices.begin(), best.vertices.end());
  return best;
}

void check_permutation(const Permutation& p, std::size_t m) {
  if (p.size() != m) throw PreconditionError("permutations of different lengths");
  std::vector<char> seen(m, 0);
  for (auto v : p) {
    if (v >= m || seen[v]) throw PreconditionError("not a permutation of 0.." + std::to_string(m - 1));
    seen[v] = 1;
  }
}

}  // namespace

std::string TargetGraph::name() const {
  if (kind == Kind::EvenCycle) return "C" + std::to_string(2 * parameter);
  return "K2," + std::to_string(parameter);
}

TargetGraph even_cycle_target(std::size_t k) {
  if (k < 2) throw PreconditionError("even cycle target needs k >= 2");
  return {TargetGraph::Kind::EvenCycle, k};
}

TargetGraph k2s_target(std::size_t s) {
  if (s < 1) throw PreconditionError("K_{2,s} target needs s >= 1");
  return {TargetGraph::Kind::K2s, s};
}

TargetGraph parse_target(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw PreconditionError("bad target '" + text + "'");
    return std::stoul(s);
  };
  if (text.rfind("c2k:", 0) == 0) return even_cycle_target(number(text.substr(4)));
  if (text.rfind("k2s:", 0) == 0) return k2s_target(number(text.substr(4)));
  if (text.size() == 3 && text.rfind("k2", 0) == 0) return k2s_target(number(text.substr(2)));
  if (text.size() >= 2 && text[0] == 'c') {
    const std::size_t len = number(text.substr(1));
    if (len % 2 != 0) throw PreconditionError("only even cycles are supported: '" + text + "'");
    return even_cycle_target(len / 2);
  }
  throw PreconditionError("unknown target '" + text + "'");
}

bool contains_target(const Graph& g, const TargetGraph& target) {
  if (target.kind == TargetGraph::Kind::EvenCycle) return contains_even_cycle(g, target.parameter);
  return contains_k2s(g, target.parameter).has_value();
}

BoundReport upper_bound_from_free_graph(const Graph& free_graph, const TargetGraph& target, double h_log,
                                        const std::string& h_source) {
  if (!std::isfinite(h_log) || h_log < 0.0)
    throw PreconditionError("h_log must be a finite non-negative log count");
  if (contains_target(free_graph, target))
    throw PreconditionError("free graph contains " + target.name());
  BoundReport r;
  r.target = target.name();
  r.n = free_graph.order();
  r.direction = "upper";
  r.h_log = h_log;
  r.h_source = h_source;
  const double half = log_half_factorial(r.n);
  r.derivation.push_back({"free graph on " + std::to_string(r.n) + " vertices verified " + r.target + "-free", 0.0});
  r.derivation.push_back({"log h of the free graph (" + h_source +
                              "); its Hamilton cycles give at least h Hamilton paths whose pairwise unions avoid " +
                              r.target,
                          h_log});
  r.derivation.push_back({"log(n!/2), the number of Hamilton paths of K_n", half});
  r.log_value = half - h_log;
  r.derivation.push_back({"log H_n <= log(n!/2) - log h", r.log_value});
  return r;
}

double replay_bound(const BoundReport& report) {
  if (report.direction == "lower") return report.h_log;
  return log_half_factorial(report.n) - report.h_log;
}

std::vector<ExponentRow> theorem_exponent_table(const TargetGraph& target) {
  std::vector<ExponentRow> rows;
  if (target.kind == TargetGraph::Kind::K2s) {
    if (target.parameter == 3)
      rows.push_back({"K2,3", "1/2", 0.5, "2^{-1/2}", std::pow(2.0, -0.5), false, "from Furedi graphs with t = 2"});
    if (target.parameter == 4)
      rows.push_back({"K2,4", "1/2", 0.5, "3^{-1/2}", std::pow(3.0, -0.5), false, "from Furedi graphs with t = 3"});
    return rows;
  }
  const auto k = static_cast<long>(target.parameter);
  const std::string name = target.name();
  rows.push_back({name, fraction(3 * k - 2, 3 * k), 1.0 - 2.0 / (3.0 * static_cast<double>(k)), "", std::nullopt,
                  false, "general even cycle bound from LPS graphs"});
  if (k == 3) rows.push_back({name, "2/3", 2.0 / 3.0, "", std::nullopt, false, "from generalized quadrangles"});
  if (k == 4 || k == 5) rows.push_back({name, "4/5", 0.8, "", std::nullopt, false, "from generalized hexagons"});
  const long den = 2 * k - 2 - (2 * k) / 4 + 1;
  rows.push_back({name, fraction(den - 1, den), 1.0 - 1.0 / static_cast<double>(den), "", std::nullopt, true,
                  "conditional on an eigenvalue conjecture for CD(k,q)"});
  return rows;
}

bool permutations_collide(const Permutation& sigma, const Permutation& tau) {
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    if (sigma[i] == tau[i + 1] || tau[i] == sigma[i + 1]) return true;
  return false;
}

HamiltonPathFamily build_k23_family(const std::vector<Permutation>& sigma_family) {
  HamiltonPathFamily fam;
  fam.creating_target = k2s_target(3);
  if (sigma_family.empty()) return fam;
  const std::size_t m = sigma_family.front().size();
  if (m == 0) throw PreconditionError("empty permutation");
  fam.n = 4 * m;
  for (const auto& sigma : sigma_family) {
    check_permutation(sigma, m);
    std::vector<Vertex> path;
    for (std::size_t i = 0; i < m; ++i) {
      path.push_back(static_cast<Vertex>(4 * i));
      path.push_back(static_cast<Vertex>(4 * sigma[i] + 2));
      path.push_back(static_cast<Vertex>(4 * i + 1));
      path.push_back(static_cast<Vertex>(4 * sigma[i] + 3));
    }
    fam.paths.push_back(std::move(path));
  }
  return fam;
}

FamilyVerdict verify_creating_family(const HamiltonPathFamily& family) {
  FamilyVerdict v;
  for (std::size_t i = 0; i < family.paths.size(); ++i) {
    for (std::size_t j = i + 1; j < family.paths.size(); ++j) {
      ++v.pairs_checked;
      if (!contains_target(path_union(family.n, family.paths[i], family.paths[j]), family.creating_target)) {
        v.passed = false;
        v.first_failure = std::make_pair(i, j);
        return v;
      }
    }
  }
  return v;
}

std::vector<std::vector<Vertex>> hamilton_paths_of_complete(std::size_t n) {
  if (n < 2) throw PreconditionError("hamilton_paths_of_complete needs n >= 2");
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    if (p.front() < p.back()) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

HnResult brute_force_hn(std::size_t n, const TargetGraph& target, std::uint64_t node_budget) {
  if (n < 2 || n > kMaxBruteForceHn)
    throw ResourceLimitError("brute_force_hn supports 2 <= n <= " + std::to_string(kMaxBruteForceHn));
  HnResult r;
  r.n = n;
  r.target = target;
  const auto paths = hamilton_paths_of_complete(n);
  r.paths = paths.size();
  const auto creating = symmetric_max_clique(relation_graph(paths, n, target, true), paths, node_budget);
  const auto avoiding = symmetric_max_clique(relation_graph(paths, n, target, false), paths, node_budget);
  r.creating = creating.vertices.size();
  r.avoiding = avoiding.vertices.size();
  r.creating_optimal = creating.proven_optimal;
  r.avoiding_optimal = avoiding.proven_optimal;
  for (Vertex v : creating.vertices) r.creating_family.push_back(paths[v]);
  for (Vertex v : avoiding.vertices) r.avoiding_family.push_back(paths[v]);
  r.product_holds = r.creating * r.avoiding <= r.paths;
  return r;
}

CollidingFamily colliding_family_search(std::size_t m, std::uint64_t node_budget) {
  if (m < 1 || m > kMaxCollidingM)
    throw ResourceLimitError("colliding_family_search supports 1 <= m <= " + std::to_string(kMaxCollidingM));
  std::vector<Permutation> perms;
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  GraphBuilder b(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i + 1; j < perms.size(); ++j)
      if (permutations_collide(perms[i], perms[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  const auto clique = max_clique(b.build(), node_budget);
  CollidingFamily r;
  r.m = m;
  for (Vertex v : clique.vertices) r.family.push_back(perms[v]);
  r.proven_optimal = clique.proven_optimal;
  r.nodes = clique.nodes;
  r.golden_reference = std::pow((1.0 + std::sqrt(5.0)) / 2.0, static_cast<double>(m));
  return r;
}

BoundReport lower_bound_from_family(const HamiltonPathFamily& family, const FamilyVerdict& verdict) {
  if (!verdict.passed) throw PreconditionError("family is not " + family.creating_target.name() + "-creating");
  if (family.paths.empty()) throw PreconditionError("empty family");
  BoundReport r;
  r.target = family.creating_target.name();
  r.n = family.n;
  r.direction = "lower";
  r.h_log = std::log(static_cast<double>(family.paths.size()));
  r.h_source = "verified creating family";
  r.log_value = r.h_log;
  r.derivation.push_back({std::to_string(family.paths.size()) + " Hamilton paths on " + std::to_string(family.n) +
                              " vertices, " + std::to_string(verdict.pairs_checked) + " pairs verified",
                          r.h_log});
  r.derivation.push_back({"log H_n >= log |family|", r.log_value});
  return r;
}

}  // namespace pseudoham
