#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace pseudoham::cli {

namespace {

json optional_json(const auto& v) {
  if (!v) return nullptr;
  return json(*v);
}

json edge_json(const std::optional<Edge>& e) {
  if (!e) return nullptr;
  return json::array({e->u, e->v});
}

}  // namespace

json finalize(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items()) out[k] = finalize(v);
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(finalize(v));
    return out;
  }
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
  }
  return j;
}

std::string dump(const json& j) { return finalize(j).dump(2) + "\n"; }

json to_json(const BigCount& c) { return c.to_string(); }

json to_json(const DegreeProfile& d) {
  return {{"min", d.min_degree}, {"max", d.max_degree}, {"average", d.average()}, {"degree_sum", d.degree_sum},
          {"regular", d.regular()}};
}

json to_json(const SpectralCertificate& c) {
  json j = {{"mode", mode_name(c.mode)},
            {"n", c.n},
            {"edges", c.edges},
            {"degrees", to_json(c.degrees)},
            {"lambda_1", c.lambda_1},
            {"lambda_n", c.lambda_n},
            {"lambda", c.lambda},
            {"R", c.R},
            {"lambda_bar", c.lambda_bar},
            {"cond1_ratio", c.cond1_ratio},
            {"cond2_ratio", c.cond2_ratio},
            {"cond3_ratio", c.cond3_ratio},
            {"cond1_primed_slack", c.cond1_primed_slack},
            {"cond2_primed_ratio", c.cond2_primed_ratio},
            {"cond3_primed_ratio", c.cond3_primed_ratio},
            {"cond5_ratio", optional_json(c.cond5_ratio)},
            {"cond6_ratio", optional_json(c.cond6_ratio)},
            {"symmetry_error", optional_json(c.symmetry_error)},
            {"cond1_pass", c.cond1_pass},
            {"cond2_pass", c.cond2_pass},
            {"cond3_pass", c.cond3_pass},
            {"cond5_pass", optional_json(c.cond5_pass)},
            {"cond6_pass", optional_json(c.cond6_pass)}};
  j["thresholds"] = {{"r_max", c.thresholds.r_max},
                     {"cond2_min", c.thresholds.cond2_min},
                     {"cond3_min", c.thresholds.cond3_min},
                     {"cond5_min", c.thresholds.cond5_min},
                     {"cond6_min", c.thresholds.cond6_min}};
  return j;
}

json to_json(const MixingReport& r) {
  json j = {{"lemma", r.lemma},
            {"bound_parameter", r.bound_parameter},
            {"samples", r.samples},
            {"seed", r.seed},
            {"violations", r.violations},
            {"max_normalized_discrepancy", r.max_normalized_discrepancy},
            {"max_bound_ratio", r.max_bound_ratio},
            {"degree_variance_sum", r.degree_variance_sum},
            {"passed", r.passed()},
            {"first_violation", nullptr}};
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    j["first_violation"] = {{"U", v.U}, {"W", v.W}, {"lhs", v.terms.lhs}, {"rhs", v.terms.rhs}};
  }
  return j;
}

json to_json(const CorollaryReport& r) {
  json results = json::array();
  for (const auto& c : r.results) {
    results.push_back({{"name", c.name},
                       {"statement", c.statement},
                       {"applicable", c.applicable},
                       {"vacuous_reason", c.vacuous_reason},
                       {"checked", c.checked},
                       {"failed", c.failed}});
  }
  return {{"mode", mode_name(r.mode)}, {"samples", r.samples}, {"seed", r.seed}, {"passed", r.passed()},
          {"results", results}};
}

json to_json(const SuperstochasticResult& r) {
  return {{"verdict", verdict_name(r.verdict)},
          {"max_flow", r.max_flow},
          {"witness_rows", r.witness_rows},
          {"witness_cols", r.witness_cols},
          {"witness_sum", r.witness_sum},
          {"witness_required", r.witness_required},
          {"divisor", optional_json(r.divisor)},
          {"reason", r.reason}};
}

json to_json(const ChainReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"expression", s.expression}, {"relation", s.relation}, {"log_value", s.log_value},
                     {"holds", s.holds}});
  return {{"steps", steps}, {"final_log", r.final_log}, {"monotone", r.monotone()}};
}

json to_json(const PermanentBounds& b) {
  json j = {{"n", b.n},
            {"ones", b.ones},
            {"exact", b.exact ? to_json(*b.exact) : json(nullptr)},
            {"log_exact", b.exact ? json(b.exact->log()) : json(nullptr)},
            {"bregman_log", b.bregman_log},
            {"minc_row_log", b.minc_row_log},
            {"vdw_log", optional_json(b.vdw_log)},
            {"superstochastic", nullptr}};
  if (b.superstochastic) j["superstochastic"] = to_json(*b.superstochastic);
  return j;
}

json to_json(const TwoFactor& f) {
  return {{"cycles", f.cycles}, {"cycle_count", f.cycle_count()}, {"long_cycle_count", f.long_cycle_count()}};
}

json to_json(const FactorHistogram& h) {
  json by_cycles = json::object();
  for (const auto& [s, c] : h.by_cycles) by_cycles[std::to_string(s)] = to_json(c);
  json by_long = json::object();
  for (const auto& [s, c] : h.by_long_cycles) by_long[std::to_string(s)] = to_json(c);
  return {{"by_cycles", by_cycles},
          {"by_long_cycles", by_long},
          {"total", to_json(h.total)},
          {"weighted_by_long", to_json(h.weighted_by_long)},
          {"weighted_by_all", to_json(h.weighted_by_all)}};
}

json to_json(const RotationTrace& t) {
  json reps = json::array();
  for (const auto& r : t.replacements) reps.push_back({{"removed", edge_json(r.removed)}, {"added", edge_json(r.added)}});
  return {{"start", t.start},
          {"replacements", reps},
          {"replacement_count", t.replacements.size()},
          {"result", t.result},
          {"budget", t.budget},
          {"merges", t.merges},
          {"rotations", t.rotations},
          {"merge_path_lengths", t.merge_path_lengths},
          {"restarts", t.restarts}};
}

json to_json(const HamiltonCount& h) {
  return {{"cycles", to_json(h.cycles)}, {"log_cycles", h.cycles.log()}, {"method", h.method}, {"work", h.work}};
}

json to_json(const FormulaGap& g) {
  return {{"n", g.n},
          {"average_degree", g.average_degree},
          {"log_h", g.log_h},
          {"log_formula", g.log_formula},
          {"gap_per_vertex", g.gap_per_vertex},
          {"log_lower_diagnostic", g.log_lower_diagnostic},
          {"log_bregman", g.log_bregman},
          {"log_permanent", optional_json(g.log_permanent)},
          {"upper_chain", to_json(g.upper_chain)},
          {"below_bregman", g.below_bregman},
          {"below_chain", g.below_chain},
          {"below_permanent", optional_json(g.below_permanent)}};
}

json to_json(const BoundReport& r) {
  json steps = json::array();
  for (const auto& s : r.derivation) steps.push_back({{"description", s.description}, {"log_value", s.log_value}});
  return {{"target", r.target},   {"n", r.n},          {"direction", r.direction}, {"log_value", r.log_value},
          {"derivation", steps},  {"h_log", r.h_log},  {"h_source", r.h_source}};
}

json to_json(const ExponentRow& r) {
  return {{"target", r.target},
          {"symbolic", r.symbolic},
          {"exponent", r.exponent},
          {"base_symbolic", r.base_symbolic},
          {"base_factor", optional_json(r.base_factor)},
          {"conditional", r.conditional},
          {"note", r.note}};
}

json to_json(const FamilyVerdict& v) {
  json j = {{"passed", v.passed}, {"pairs_checked", v.pairs_checked}, {"first_failure", nullptr}};
  if (v.first_failure) j["first_failure"] = json::array({v.first_failure->first, v.first_failure->second});
  return j;
}

}  // namespace pseudoham::cli
