#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "pseudoham/algebra.hpp"
#include "pseudoham/bounds.hpp"
#include "pseudoham/constructions.hpp"
#include "pseudoham/error.hpp"
#include "pseudoham/graph_io.hpp"
#include "pseudoham/hamilton.hpp"
#include "pseudoham/permanent.hpp"
#include "pseudoham/rotation.hpp"
#include "pseudoham/spectral.hpp"
#include "report.hpp"

namespace ph = pseudoham;
using ph::cli::json;
using ph::cli::to_json;

namespace {

constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;

struct Outcome {
  json report;
  int code = 0;
};

// Every option of the subcommand with its effective value.
json run_config(const CLI::App& sub) {
  json options = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_name() == "--help") continue;
    std::string name = opt->get_name(false, true);
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    std::string value = opt->count() > 0 ? "" : opt->get_default_str();
    if (opt->count() > 0) {
      const auto& results = opt->results();
      for (std::size_t i = 0; i < results.size(); ++i) value += (i ? "," : "") + results[i];
    }
    options[name] = value;
  }
  return {{"command", sub.get_name()}, {"options", options}};
}

ph::CertificateThresholds thresholds_from(double r_max, double c2, double c3, double c5, double c6) {
  return {r_max, c2, c3, c5, c6};
}

std::vector<ph::Permutation> parse_permutations(const std::string& text) {
  std::vector<ph::Permutation> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    ph::Permutation p;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) p.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudoham: pseudorandom graph constructions, spectral certificates, permanents and Hamilton cycles"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--report", report_path, "write the JSON report here instead of stdout");

  std::function<Outcome()> action;

  // build
  auto* build = app.add_subcommand("build", "build a construction and write its edge list");
  std::string family;
  std::uint64_t q = 0, p = 0;
  std::uint32_t t = 0;
  std::string out_path;
  build->add_option("--family", family, "gq, gh, lps or furedi")->required()->check(
      CLI::IsMember({"gq", "gh", "lps", "furedi"}));
  build->add_option("--q", q, "prime power q")->required();
  build->add_option("--p", p, "prime p (lps)");
  build->add_option("--t", t, "subgroup order t (furedi)");
  build->add_option("-o,--out", out_path, "edge-list path")->required();
  build->callback([&] {
    action = [&]() -> Outcome {
      ph::Construction c;
      if (family == "gq") c = ph::build_generalized_quadrangle(q);
      if (family == "gh") c = ph::build_generalized_hexagon(q);
      if (family == "lps") c = ph::build_lps(p, q);
      if (family == "furedi") c = ph::build_furedi(t, q);
      ph::save_graph(c.graph, out_path);
      json r = {{"family", family},
                {"parameters", c.descriptor.parameters},
                {"n", c.graph.order()},
                {"edges", c.graph.size()},
                {"degrees", to_json(c.graph.degree_profile())},
                {"bipartite", c.graph.has_bipartition()},
                {"expected_n", c.descriptor.expected_n},
                {"expected_degrees", c.descriptor.expected_degrees},
                {"matches_descriptor", ph::matches_descriptor(c)},
                {"path", out_path}};
      return {r, ph::matches_descriptor(c) ? 0 : kExitVerdict};
    };
  });

  // certify
  auto* certify = app.add_subcommand("certify", "spectral certificate of a graph");
  std::string graph_path;
  std::string mode = "auto";
  double r_max = 1.0, c2 = 1.0, c3 = 1.0, c5 = 1.0, c6 = 1.0;
  auto add_thresholds = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "auto, irregular or bipartite")->capture_default_str()->check(
        CLI::IsMember({"auto", "irregular", "bipartite", "bipartite-regular"}));
    sub->add_option("--r-max", r_max, "pass threshold for (Delta - delta) / lambda")->capture_default_str();
    sub->add_option("--cond2-min", c2, "pass threshold for (d/lambda)/log^2 n")->capture_default_str();
    sub->add_option("--cond3-min", c3, "pass threshold for log d log(d/lambda)/log n")->capture_default_str();
    sub->add_option("--cond5-min", c5, "pass threshold for log(d/lambda)/log log n")->capture_default_str();
    sub->add_option("--cond6-min", c6, "pass threshold for the bipartite cond3 analogue")->capture_default_str();
  };
  auto make_cert = [&](const ph::Graph& g) {
    std::optional<ph::SpectralMode> m;
    if (mode != "auto") m = ph::parse_mode(mode);
    return ph::certify(g, m, thresholds_from(r_max, c2, c3, c5, c6));
  };
  certify->add_option("graph", graph_path, "edge-list file")->required()->check(CLI::ExistingFile);
  add_thresholds(certify);
  certify->callback([&] {
    action = [&]() -> Outcome {
      const auto g = ph::load_graph(graph_path);
      return {{{"certificate", to_json(make_cert(g))}}, 0};
    };
  });

  // mixing-check
  auto* mixing = app.add_subcommand("mixing-check", "sample the mixing inequalities and their consequences");
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  bool corollaries = false;
  mixing->add_option("graph", graph_path, "edge-list file")->required()->check(CLI::ExistingFile);
  mixing->add_option("--samples", samples, "sampled (U, W) pairs")->capture_default_str();
  mixing->add_option("--seed", seed, "random seed")->capture_default_str();
  mixing->add_flag("--corollaries", corollaries, "also run the sampled consequence checks");
  add_thresholds(mixing);
  mixing->callback([&] {
    action = [&]() -> Outcome {
      const auto g = ph::load_graph(graph_path);
      const auto cert = make_cert(g);
      json r = {{"certificate", to_json(cert)}};
      bool ok = true;
      const auto irr = ph::verify_mixing_irregular(g, cert.lambda_bar, samples, seed);
      r["irregular"] = to_json(irr);
      ok = ok && irr.passed();
      if (cert.mode == ph::SpectralMode::BipartiteRegular) {
        const auto bip = ph::verify_mixing_bipartite(g, cert.lambda, samples, seed);
        r["bipartite"] = to_json(bip);
        ok = ok && bip.passed();
      }
      if (corollaries) {
        const auto cor = ph::verify_corollaries(g, cert, samples, seed);
        r["corollaries"] = to_json(cor);
        ok = ok && cor.passed();
      }
      r["passed"] = ok;
      return {r, ok ? 0 : kExitVerdict};
    };
  });

  // permanent
  auto* permanent = app.add_subcommand("permanent", "permanent of the adjacency matrix and its bounds");
  bool skip_exact = false;
  double divisor = 0.0;
  permanent->add_option("graph", graph_path, "edge-list file")->required()->check(CLI::ExistingFile);
  permanent->add_flag("--no-exact", skip_exact, "skip the exact Ryser evaluation");
  permanent->add_option("--divisor", divisor, "test A/divisor instead of A/(delta - 9 lambda_bar)");
  add_thresholds(permanent);
  permanent->callback([&] {
    action = [&]() -> Outcome {
      const auto g = ph::load_graph(graph_path);
      auto bounds = ph::permanent_bounds(ph::BinaryMatrix::adjacency(g), !skip_exact);
      json r;
      const double d = g.degree_profile().average();
      if (divisor > 0.0) {
        bounds.superstochastic = ph::scaled_superstochastic_check(g, divisor);
      } else if (g.order() <= ph::kMaxSpectrumOrder) {
        const auto cert = make_cert(g);
        r["certificate"] = to_json(cert);
        bounds.superstochastic = ph::scaled_superstochastic_check(g, cert);
        if (cert.degrees.min_degree > 9.0 * cert.lambda_bar)
          r["lower_chain"] = to_json(ph::permanent_lower_chain(g, cert));
        else
          r["lower_chain"] = "not applicable at this scale: delta - 9 lambda_bar <= 0";
      }
      r["bounds"] = to_json(bounds);
      if (d > 1.0) r["upper_chain"] = to_json(ph::permanent_upper_chain(g.order(), d));
      return {r, 0};
    };
  });

  // two-factors
  auto* factors = app.add_subcommand("two-factors", "enumerate 2-factors and check the oriented count identity");
  std::optional<std::size_t> s_filter;
  bool list = false;
  factors->add_option("graph", graph_path, "edge-list file")->required()->check(CLI::ExistingFile);
  factors->add_option("--s", s_filter, "only 2-factors with exactly s cycles");
  factors->add_flag("--list", list, "include every 2-factor in the report");
  factors->callback([&] {
    action = [&]() -> Outcome {
      const auto g = ph::load_graph(graph_path);
      json r;
      r["histogram"] = to_json(ph::f_histogram(g));
      std::size_t matched = 0;
      json all = json::array();
      ph::enumerate_two_factors(
          g,
          [&](const ph::TwoFactor& f) {
            ++matched;
            if (list) all.push_back(to_json(f));
          },
          s_filter);
      r["matched"] = matched;
      if (list) r["two_factors"] = all;
      int code = 0;
      if (g.order() <= ph::kMaxIdentityOrder) {
        const auto id = ph::oriented_count_identity(g);
        r["identity"] = {{"permanent", to_json(id.permanent)},
                         {"oriented_sum", to_json(id.oriented_sum)},
                         {"equal", id.equal}};
        if (!id.equal) code = kExitVerdict;
      }
      return {r, code};
    };
  });

  // rotate
  auto* rotate = app.add_subcommand("rotate", "turn a seeded 2-factor into a Hamilton cycle by rotations");
  std::optional<std::uint64_t> factor_seed;
  std::optional<std::size_t> budget;
  std::size_t restarts = ph::kRotationRestarts;
  rotate->add_option("graph", graph_path, "edge-list file")->required()->check(CLI::ExistingFile);
  rotate->add_option("--seed", seed, "random seed")->capture_default_str();
  rotate->add_option("--factor-seed", factor_seed, "seed of the starting 2-factor (default: --seed)");
  rotate->add_option("--budget", budget, "rotations per merge (default from the certificate)");
  rotate->add_option("--restarts", restarts, "restarts after a failed attempt")->capture_default_str();
  add_thresholds(rotate);
  rotate->callback([&] {
    action = [&]() -> Outcome {
      const auto g = ph::load_graph(graph_path);
      const auto f = ph::random_two_factor(g, factor_seed.value_or(seed));
      json r;
      if (!f) {
        r["success"] = false;
        r["failure"] = "graph has no 2-factor";
        return {r, kExitVerdict};
      }
      std::size_t b = 0;
      if (budget) {
        b = *budget;
      } else {
        const auto cert = make_cert(g);
        r["lambda_bar"] = cert.lambda_bar;
        b = ph::rotation_budget(g.order(), cert.degrees.average(), cert.lambda_bar);
      }
      const auto out = ph::rotate_to_hamilton(g, *f, b, seed, restarts);
      r["start_factor"] = to_json(*f);
      r["success"] = out.success;
      r["attempts"] = out.attempts;
      r["failure"] = out.failure;
      r["trace"] = to_json(out.trace);
      if (out.success) {
        std::string why;
        r["replay_ok"] = ph::replay_trace(g, *f, out.trace, &why);
        r["replay_error"] = why;
      }
      return {r, out.success ? 0 : kExitVerdict};
    };
  });

  // hamilton-count
  auto* count = app.add_subcommand("hamilton-count", "exact number of Hamilton cycles");
  std::string method = "auto";
  ph::HamiltonCountOptions count_opts;
  count->add_option("graph", graph_path, "edge-list file")->required()->check(CLI::ExistingFile);
  count->add_option("--method", method, "auto, dp or bb")->capture_default_str()->check(
      CLI::IsMember({"auto", "dp", "bb"}));
  count->add_option("--max-states", count_opts.max_dp_states, "subset DP state cap per layer")->capture_default_str();
  count->add_option("--max-nodes", count_opts.max_search_nodes, "branch-and-bound node cap")->capture_default_str();
  count->callback([&] {
    action = [&]() -> Outcome {
      const auto g = ph::load_graph(graph_path);
      count_opts.method = method == "dp"   ? ph::CountMethod::SubsetDp
                          : method == "bb" ? ph::CountMethod::BranchAndBound
                                           : ph::CountMethod::Auto;
      try {
        const auto h = ph::count_hamilton_cycles(g, count_opts);
        json r = {{"count", to_json(h)}};
        if (h.cycles > ph::BigCount(0)) r["formula_gap"] = to_json(ph::formula_gap(g, h.cycles));
        return {r, 0};
      } catch (const ph::CountLimitError& e) {
        json r = {{"error", e.what()},
                  {"method", e.method()},
                  {"work", e.work()},
                  {"partial", to_json(e.partial())}};
        return {r, kExitVerdict};
      }
    };
  });

  // bound
  auto* bound = app.add_subcommand("bound", "upper bound on H_n(G) from a G-free graph");
  std::string target_text;
  std::string free_path;
  std::string h_log_text = "auto";
  bound->add_option("--target", target_text, "c4, c6, c8, c10, c2k:K, k23, k24 or k2s:S")->required();
  bound->add_option("--free-graph", free_path, "edge-list of a G-free graph")->required()->check(CLI::ExistingFile);
  bound->add_option("--h-log", h_log_text, "log of a lower bound on its Hamilton cycles, or auto")
      ->capture_default_str();
  bound->callback([&] {
    action = [&]() -> Outcome {
      const auto target = ph::parse_target(target_text);
      const auto g = ph::load_graph(free_path);
      double h_log = 0.0;
      std::string source = "supplied";
      json r;
      if (h_log_text == "auto") {
        const auto h = ph::count_hamilton_cycles(g);
        r["hamilton_count"] = to_json(h);
        if (h.cycles == ph::BigCount(0)) {
          r["error"] = "free graph has no Hamilton cycle";
          return {r, kExitVerdict};
        }
        h_log = h.cycles.log();
        source = "exact count, " + h.method;
      } else {
        h_log = std::stod(h_log_text);
      }
      const auto rep = ph::upper_bound_from_free_graph(g, target, h_log, source);
      r["report"] = to_json(rep);
      r["replayed_log_value"] = ph::replay_bound(rep);
      json table = json::array();
      for (const auto& row : ph::theorem_exponent_table(target)) table.push_back(to_json(row));
      r["exponent_table"] = table;
      return {r, 0};
    };
  });

  // k23-family
  auto* k23 = app.add_subcommand("k23-family", "K_{2,3}-creating Hamilton path family from colliding permutations");
  std::size_t m = 3;
  std::string perms_text;
  std::uint64_t node_budget = ph::kDefaultCliqueNodes;
  k23->add_option("--m", m, "permutation length")->capture_default_str();
  k23->add_option("--perms", perms_text, "explicit permutations of 0..m-1, e.g. \"0,1;1,0\"");
  k23->add_option("--node-budget", node_budget, "clique search node cap")->capture_default_str();
  k23->callback([&] {
    action = [&]() -> Outcome {
      json r;
      std::vector<ph::Permutation> perms;
      if (!perms_text.empty()) {
        perms = parse_permutations(perms_text);
      } else {
        const auto found = ph::colliding_family_search(m, node_budget);
        perms = found.family;
        r["search"] = {{"m", found.m},
                       {"size", found.family.size()},
                       {"proven_optimal", found.proven_optimal},
                       {"nodes", found.nodes},
                       {"golden_reference", found.golden_reference}};
      }
      r["permutations"] = perms;
      const auto fam = ph::build_k23_family(perms);
      const auto verdict = ph::verify_creating_family(fam);
      r["family"] = {{"n", fam.n}, {"paths", fam.paths}, {"target", fam.creating_target.name()}};
      r["verdict"] = to_json(verdict);
      if (verdict.passed && !fam.paths.empty()) r["report"] = to_json(ph::lower_bound_from_family(fam, verdict));
      return {r, verdict.passed ? 0 : kExitVerdict};
    };
  });

  // params-search
  auto* params = app.add_subcommand("params-search", "LPS parameter pairs (p, q) in a window");
  unsigned k = 2;
  double delta = 0.1, epsilon = 1.0;
  std::uint64_t limit = 200;
  params->add_option("--k", k, "cycle half-length k")->capture_default_str();
  params->add_option("--delta", delta, "window exponent offset")->capture_default_str();
  params->add_option("--epsilon", epsilon, "relative window width")->capture_default_str();
  params->add_option("--limit", limit, "largest p and q searched")->capture_default_str();
  params->callback([&] {
    action = [&]() -> Outcome {
      json pairs = json::array();
      for (const auto& pq : ph::find_lps_parameters(k, delta, epsilon, limit))
        pairs.push_back({{"p", pq.p}, {"q", pq.q}, {"n", pq.q * (pq.q * pq.q - 1)}});
      return {{{"pairs", pairs}}, 0};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  Outcome out;
  try {
    out = action();
  } catch (const ph::ResourceLimitError& e) {
    std::cerr << "pseudoham: " << e.what() << "\n";
    out = {{{"error", e.what()}}, kExitVerdict};
  } catch (const ph::Error& e) {
    std::cerr << "pseudoham: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "pseudoham: " << e.what() << "\n";
    return kExitUsage;
  }
  out.report["config"] = run_config(*sub);
  out.report["exit_code"] = out.code;
  const std::string text = ph::cli::dump(out.report);
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(report_path);
    f << text;
    if (!f) {
      std::cerr << "pseudoham: cannot write " << report_path << "\n";
      return kExitUsage;
    }
  }
  return out.code;
}
