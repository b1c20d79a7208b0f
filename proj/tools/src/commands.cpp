// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <algorithm>
#include <cmath>

#include "CLI11.hpp"
#include "fplab/contraction.hpp"
#include "fplab/dp.hpp"
#include "fplab/hybrid.hpp"
#include "fplab/sampling.hpp"
#include "fplab/volterra.hpp"
#include "inputs.hpp"

namespace fplab::cli {

namespace {

HardyRogersWeights weights_from(const Config& cfg) {
  return {cfg.number_or("alpha", 0.0), cfg.number_or("beta", 0.0), cfg.number_or("gamma", 0.0),
          cfg.number_or("delta", 0.0)};
}

ConditionSpec condition_from(const Config& cfg, const RunOptions& opts) {
  const std::string kind = cfg.get("condition").value_or("generalized");
  if (kind == "nadler") return ConditionSpec::nadler(cfg.number("lambda"));
  const FFunction f = FFunction::parse(cfg.get("F").value_or("log"));
  const double tau = opts.tau ? *opts.tau : cfg.number("tau");
  if (kind == "wardowski") return ConditionSpec::wardowski(f, tau);
  if (kind == "sgroi") return ConditionSpec::sgroi(f, tau);
  const double p = opts.p ? *opts.p : cfg.number_or("p", 1.0);
  const PhiFunction phi = PhiFunction::parse(cfg.require("phi"));
  if (kind == "generalized") return ConditionSpec::generalized(f, phi, tau, p);
  if (kind == "hardy-rogers") return ConditionSpec::hardy_rogers(f, phi, tau, p, weights_from(cfg));
  throw ConfigError(cfg.origin() + ": unknown condition '" + kind + "'");
}

std::vector<Field> violation_fields(const Violation& v) {
  return {{"x", v.x}, {"y", v.y}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"gap", v.gap}};
}

std::vector<Field> report_fields(const CertificateReport& r) {
  return {{"samples", r.samples},
          {"skipped", r.skipped},
          {"violations", r.violations.size()},
          {"min_margin", r.min_margin},
          {"verdict", to_string(r.verdict)}};
}

std::string set_text(const std::optional<ClosedSet>& set) { return set ? set->to_string() : "empty"; }

std::string flag_text(std::optional<bool> flag) {
  if (!flag) return "not-decided";
  return *flag ? "true" : "false";
}

void emit_witness(Emitter& out, const std::string& map, const char* property, const std::optional<LimitWitness>& w) {
  if (!w) return;
  out.record("limit", {{"map", map},
                       {"property", property},
                       {"x0", w->x0},
                       {"side", to_string(w->side)},
                       {"t", w->t},
                       {"set", w->a.to_string()},
                       {"u", w->u}});
}

NodalFunction nodal(const Expr& e, std::span<const double> nodes) {
  std::vector<double> v;
  v.reserve(nodes.size());
  for (double x : nodes) v.push_back(e.eval(x));
  return NodalFunction(std::move(v));
}

std::vector<double> time_nodes(const volterra::Instance& inst) {
  std::vector<double> t(inst.n() + 1);
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = inst.node(j);
  return t;
}

// Node values as records; human output shows about `shown` evenly spaced nodes.
void emit_nodes(Emitter& out, std::string_view type, const char* axis, std::span<const double> nodes,
                const NodalFunction& values, const char* name) {
  const std::size_t stride =
      out.format() == Format::human ? std::max<std::size_t>(1, (nodes.size() - 1) / 10) : std::size_t{1};
  for (std::size_t i = 0; i < nodes.size(); i += stride) {
    if (out.format() == Format::human && i + stride >= nodes.size()) i = nodes.size() - 1;
    out.record(type, {{axis, nodes[i]}, {name, values[i]}});
  }
}

}  // namespace

int cmd_certify(const Config& cfg, const RunOptions& opts, Emitter& out) {
  const PiecewiseSetMap t = set_map(cfg, "T");
  const PiecewiseMap f = cfg.has("f") ? single_map(cfg, "f") : identity_map(t.domain());
  const ConditionSpec condition = condition_from(cfg, opts);
  const SampleGrid grid{opts.grid ? *opts.grid : cfg.count_or("grid", 201), 1e-9};
  const CertifyOptions options{static_cast<unsigned>(cfg.count_or("threads", 1))};
  const std::string form = cfg.get("form").value_or("log");
  if (form != "log" && form != "exponential") throw ConfigError(cfg.origin() + ": form must be log or exponential");

  const CertificateReport report = form == "exponential"
                                       ? certify_exponential_form(condition, f, t, grid, options)
                                       : certify(condition, f, t, grid, options);

  std::vector<Field> head{{"name", cfg.get("name").value_or("-")},
                          {"condition", to_string(condition.kind())},
                          {"form", form}};
  if (condition.kind() == ConditionSpec::Kind::nadler) {
    head.emplace_back("lambda", condition.lambda());
  } else {
    head.emplace_back("F", condition.f_function()->name());
    head.emplace_back("tau", condition.tau());
    if (condition.phi()) {
      head.emplace_back("phi", condition.phi()->to_string());
      head.emplace_back("p", condition.p());
    }
  }
  head.emplace_back("grid", grid.points);
  for (auto& field : report_fields(report)) head.push_back(std::move(field));
  out.record("certify", head);
  out.limited("violation", report.violations, violation_fields);
  return report.verdict == Verdict::holds_on_samples ? kExitOk : kExitFailed;
}

int cmd_pairs(const Config& cfg, const RunOptions& opts, Emitter& out) {
  PairScanOptions scan;
  scan.resolution = cfg.number_or("resolution", scan.resolution);
  if (opts.grid) scan.limit_grid_points = *opts.grid;

  std::vector<std::string> maps{"f"};
  if (cfg.has("g")) maps.emplace_back("g");
  for (const std::string& name : maps) {
    const HybridPair pair = pair_from(cfg, name);
    const PairPropertyReport r = analyze_pair(pair, scan);
    std::optional<bool> commuting;
    std::optional<bool> weakly_commuting;
    std::optional<bool> weakly_compatible;
    if (r.commuting) {
      commuting = r.commuting->commuting;
      weakly_commuting = r.commuting->weakly_commuting;
      weakly_compatible = r.commuting->weakly_compatible;
    }
    const bool implication = !(r.ea_clr.ea && r.ea_clr.f_range_closed) || r.ea_clr.clr;
    out.record("pair", {{"name", cfg.get("name").value_or("-")},
                        {"map", name},
                        {"space", to_string(r.kind)},
                        {"coincidence", set_text(r.coincidence)},
                        {"common_fixed", set_text(r.common_fixed)},
                        {"commuting", flag_text(commuting)},
                        {"weakly_commuting", flag_text(weakly_commuting)},
                        {"weakly_compatible", flag_text(weakly_compatible)},
                        {"compatible", "not-decided"},
                        {"noncompatible", "not-decided"},
                        {"coincidentally_idempotent", r.idempotency.coincidentally},
                        {"idempotency_counterexample", r.idempotency.counterexample},
                        {"occasionally_idempotent", r.idempotency.occasionally},
                        {"idempotency_witness", r.idempotency.witness},
                        {"ea", r.ea_clr.ea},
                        {"clr", r.ea_clr.clr},
                        {"range_closed", r.ea_clr.f_range_closed},
                        {"range_approximate", r.ea_clr.range_approximate},
                        {"ea_closed_implies_clr", implication}});
    emit_witness(out, name, "ea", r.ea_clr.ea_witness);
    emit_witness(out, name, "clr", r.ea_clr.clr_witness);
  }
  return kExitOk;
}

int cmd_solve_dp(const Config& cfg, const RunOptions& opts, Emitter& out) {
  const std::size_t w_points = opts.grid ? *opts.grid : cfg.count_or("W_points", 201);
  const std::size_t d_points = opts.grid ? *opts.grid : cfg.count_or("D_points", 201);
  const dp::Instance inst(set_value(cfg, "W"), w_points, set_value(cfg, "D"), d_points,
                          expr_value(cfg, "g", {"x", "y"}), expr_value(cfg, "G1", {"x", "y", "z"}),
                          expr_value(cfg, "G2", {"x", "y", "z"}), expr_value(cfg, "tau", {"x", "y"}));
  dp::SolveOptions options;
  options.tol = opts.tol ? *opts.tol : cfg.number_or("tol", options.tol);
  options.max_iters = cfg.count_or("max_iters", options.max_iters);
  options.threads = cfg.count_or("threads", 1);
  const Expr h0_expr = cfg.has("h0") ? expr_value(cfg, "h0", {"x"}) : parse_expr("0", {"x"});
  const dp::GridFunction h0 = nodal(h0_expr, inst.states());

  const dp::SolveResult result = dp::solve_successive(inst, 1, h0, options);
  const double z = result.h.sup_norm();

  out.record("dp-instance", {{"name", cfg.get("name").value_or("-")},
                             {"states", inst.states().size()},
                             {"decisions", inst.decisions().size()},
                             {"g_bound", inst.g_bound()},
                             {"G1_bound", dp::big_g_bound(inst, 1, -z, z)},
                             {"G2_bound", dp::big_g_bound(inst, 2, -z, z)},
                             {"max_snap_error", inst.max_snap_error()}});
  std::vector<Field> solve{{"operator", 1},
                           {"iterations", result.iterations},
                           {"converged", result.converged},
                           {"last_step", result.last_step},
                           {"residual", result.residual},
                           {"max_step_ratio", result.max_step_ratio},
                           {"sup_norm", z}};
  if (cfg.has("exact"))
    solve.emplace_back("error_vs_exact", sup_distance(result.h, nodal(expr_value(cfg, "exact", {"x"}), inst.states())));
  out.record("dp-solve", solve);

  const dp::PosteriorReport post = dp::check_posterior(inst, result.h, options.tol);
  out.record("dp-posterior", {{"coincidence_gap", post.coincidence_gap},
                              {"coincide", post.coincide},
                              {"idempotency_gap", post.idempotency_gap},
                              {"idempotent", post.idempotent}});

  if (cfg.has("check_tau") || opts.tau) {
    const double tau = opts.tau ? *opts.tau : cfg.number("check_tau");
    const PhiFunction phi = PhiFunction::parse(cfg.require("check_phi"));
    dp::HypothesisSampling sampling;
    sampling.samples = cfg.count_or("samples", sampling.samples);
    sampling.lo = cfg.number_or("value_lo", sampling.lo);
    sampling.hi = cfg.number_or("value_hi", sampling.hi);
    sampling.seed = opts.seed;
    const CertificateReport report = dp::verify_hypothesis1(inst, tau, phi, sampling);
    std::vector<Field> fields{{"tau", tau}, {"phi", phi.to_string()}, {"seed", static_cast<std::size_t>(opts.seed)}};
    for (auto& field : report_fields(report)) fields.push_back(std::move(field));
    out.record("dp-hypothesis1", fields);
    out.limited("dp-violation", report.violations, violation_fields);
  }
  emit_nodes(out, "dp-solution", "x", inst.states(), result.h, "h");
  return result.converged ? kExitOk : kExitFailed;
}

int cmd_solve_volterra(const Config& cfg, const RunOptions& opts, Emitter& out) {
  const std::size_t n = opts.grid ? *opts.grid : cfg.count_or("n", 1000);
  const volterra::Instance inst(expr_value(cfg, "q", {"t"}), expr_value(cfg, "k", {"t", "s"}),
                                expr_value(cfg, "sigma", {"t"}), set_expr_value(cfg, "F", {"s", "x"}), n);
  const volterra::SelectionRule rule =
      volterra::parse_rule(cfg.get("rule").value_or(volterra::to_string(volterra::SelectionRule::nearest_to_current)));
  volterra::SolveOptions options;
  options.tol = opts.tol ? *opts.tol : cfg.number_or("tol", options.tol);
  options.max_iters = cfg.count_or("max_iters", options.max_iters);
  options.threads = cfg.count_or("threads", 1);

  const auto kt = volterra::kernel_tau(inst);
  const double x_lo = cfg.number_or("x_lo", -1.0);
  const double x_hi = cfg.number_or("x_hi", 1.0);
  const auto mono = volterra::check_monotone(inst, x_lo, x_hi, opts.seed);
  out.record("volterra-instance", {{"name", cfg.get("name").value_or("-")},
                                   {"n", inst.n()},
                                   {"kernel_sup", kt.sup},
                                   {"kernel_tau", kt.tau},
                                   {"kernel_tau_positive", kt.positive},
                                   {"increasing_in_x", mono.holds},
                                   {"increasing_samples", mono.samples}});

  const volterra::SolveResult result = volterra::solve_inclusion(inst, rule, options);
  const std::vector<double> nodes = time_nodes(inst);
  std::vector<Field> solve{{"rule", volterra::to_string(rule)},
                           {"iterations", result.iterations},
                           {"converged", result.converged},
                           {"last_step", result.last_step},
                           {"residual", result.residual},
                           {"sup_norm", result.x.sup_norm()}};
  if (cfg.has("exact"))
    solve.emplace_back("error_vs_exact", sup_distance(result.x, nodal(expr_value(cfg, "exact", {"t"}), nodes)));
  out.record("volterra-solve", solve);

  if (cfg.has("lower") && cfg.has("upper")) {
    const auto a = nodal(expr_value(cfg, "lower", {"t"}), nodes);
    const auto b = nodal(expr_value(cfg, "upper", {"t"}), nodes);
    const auto br = volterra::check_bracket(a, b, inst, result.x);
    out.record("volterra-bracket", {{"lower", br.lower},
                                    {"lower_violations", br.lower_violations.size()},
                                    {"upper", br.upper},
                                    {"upper_violations", br.upper_violations.size()},
                                    {"ordered", flag_text(br.ordered)}});
  }

  if (cfg.has("check_tau") || opts.tau) {
    const double tau = opts.tau ? *opts.tau : cfg.number("check_tau");
    const PhiFunction phi = PhiFunction::parse(cfg.require("check_phi"));
    volterra::H3Sampling sampling;
    sampling.samples = cfg.count_or("samples", sampling.samples);
    sampling.lo = cfg.number_or("value_lo", sampling.lo);
    sampling.hi = cfg.number_or("value_hi", sampling.hi);
    sampling.seed = opts.seed;
    sampling.rule = rule;
    sampling.mode = volterra::parse_h3_mode(cfg.get("h3").value_or("hausdorff"));
    const CertificateReport report = volterra::verify_h3(inst, tau, phi, weights_from(cfg), sampling);
    std::vector<Field> fields{{"tau", tau},
                              {"phi", phi.to_string()},
                              {"mode", volterra::to_string(sampling.mode)},
                              {"seed", static_cast<std::size_t>(opts.seed)}};
    for (auto& field : report_fields(report)) fields.push_back(std::move(field));
    out.record("volterra-h3", fields);
    out.limited("volterra-violation", report.violations, [](const Violation& v) {
      return std::vector<Field>{{"t", v.x}, {"sample", v.y}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"gap", v.gap}};
    });
  }
  emit_nodes(out, "volterra-solution", "t", nodes, result.x, "x");
  return result.converged ? kExitOk : kExitFailed;
}

int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    Emitter emitter(out, opts.format);
    if (opts.command == "repro-paper") return cmd_repro_paper(opts, emitter);
    if (!opts.input) throw ConfigError("command '" + opts.command + "' needs --input");
    const Config cfg = load_config(*opts.input);
    if (opts.command == "certify") return cmd_certify(cfg, opts, emitter);
    if (opts.command == "pairs") return cmd_pairs(cfg, opts, emitter);
    if (opts.command == "solve-dp") return cmd_solve_dp(cfg, opts, emitter);
    if (opts.command == "solve-volterra") return cmd_solve_volterra(cfg, opts, emitter);
    throw ConfigError("unknown command '" + opts.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-point and coincidence-point laboratory for hybrid pairs of maps"};
  RunOptions opts;
  std::string format = "human";
  app.add_option("command", opts.command, "certify | pairs | solve-dp | solve-volterra | repro-paper")
      ->required()
      ->check(CLI::IsMember({"certify", "pairs", "solve-dp", "solve-volterra", "repro-paper"}));
  app.add_option("--input", opts.input, "Config file, or bundled:NAME for a shipped example");
  app.add_option("--grid", opts.grid, "Sample grid / state grid / time grid size");
  app.add_option("--tol", opts.tol, "Solver tolerance");
  app.add_option("--seed", opts.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "records"}))->capture_default_str();
  app.add_option("--p", opts.p, "Exponent p >= 1 of the generalized condition");
  app.add_option("--tau", opts.tau, "tau > 0 of the certified condition");
  app.add_option("--inject-wrong", opts.inject_wrong, "Corrupt the expected value of one repro row")->group("");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInput;
  }
  opts.format = format == "records" ? Format::records : Format::human;
  return run_command(opts, out, err);
}

}  // namespace fplab::cli
