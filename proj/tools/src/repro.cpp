// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "commands.hpp"
#include "fplab/contraction.hpp"
#include "fplab/format.hpp"
#include "fplab/hybrid.hpp"
#include "fplab/sampling.hpp"
#include "inputs.hpp"

namespace fplab::cli {

namespace {

struct Row {
  std::string id;
  std::string quantity;
  Value expected;
  Value computed;
  double tol = 0.0;
  std::string detail = "-";
};

bool matches(const Row& row) {
  if (row.expected.index() != row.computed.index()) return false;
  if (const auto* e = std::get_if<double>(&row.expected)) {
    const double c = std::get<double>(row.computed);
    return std::abs(*e - c) <= row.tol;
  }
  return row.expected == row.computed;
}

void corrupt(Row& row) {
  if (auto* d = std::get_if<double>(&row.expected)) {
    *d += 1.0;
  } else if (auto* i = std::get_if<std::int64_t>(&row.expected)) {
    *i += 1;
  } else if (auto* b = std::get_if<bool>(&row.expected)) {
    *b = !*b;
  } else {
    std::get<std::string>(row.expected) += " (corrupted)";
  }
}

double nan_if_empty(const std::optional<double>& v) { return v.value_or(std::nan("")); }

std::string witness_text(const std::optional<LimitWitness>& w) {
  if (!w) return "-";
  std::string out = "x0=" + format_real(w->x0) + " side=" + to_string(w->side) + " t=" + format_real(w->t) +
                    " set=" + w->a.to_string();
  if (w->u) out += " u=" + format_real(*w->u);
  return out;
}

void section3_rows(std::vector<Row>& rows) {
  const Config cfg = load_config("bundled:section-3");
  const HybridPair pair = pair_from(cfg, "f");
  const auto& t = pair.t();
  const auto& f = pair.f();

  rows.push_back({"s3-hausdorff", "H([1,2], [0,1/2])", 1.5,
                  hausdorff(ClosedSet::interval(1, 2), ClosedSet::interval(0, 0.5))});
  rows.push_back({"s3-point-distance", "d(3, [0,1/2])", 2.5, point_set_distance(3.0, ClosedSet::interval(0, 0.5))});
  rows.push_back({"s3-T-at-3", "T(3)", std::string("[0, 0.5]"), t(3.0).to_string()});

  const PairPropertyReport r = analyze_pair(pair);
  rows.push_back({"s3-coincidence", "coincidence points of (f,T)", std::string("[1, 2]"),
                  r.coincidence ? r.coincidence->to_string() : std::string("empty")});
  const double fixed = r.common_fixed && r.common_fixed->is_singleton() ? r.common_fixed->min() : std::nan("");
  rows.push_back({"s3-common-fixed", "common fixed point of (f,T)", 1.5, fixed, 1e-6,
                  r.common_fixed ? r.common_fixed->to_string() : "empty"});
  rows.push_back({"s3-range-closed", "f(X) closed", true, r.ea_clr.f_range_closed});
  rows.push_back({"s3-clr", "(f,T) has the common limit range property", true, r.ea_clr.clr,
                  0.0, witness_text(r.ea_clr.clr_witness)});
  const auto w = limit_witness(pair, 1.0, Side::right);
  rows.push_back({"s3-clr-limit", "lim f(1 + 1/n)", 2.0, w ? w->t : std::nan(""), 0.0, witness_text(w)});
  rows.push_back({"s3-clr-limit-u", "u with fu = lim f(1 + 1/n)", 1.0, w ? nan_if_empty(w->u) : std::nan("")});
  rows.push_back({"s3-coincidentally-idempotent", "coincidentally idempotent", false, r.idempotency.coincidentally});
  rows.push_back({"s3-idempotency-counterexample", "v with ffv != fv", 1.0,
                  nan_if_empty(r.idempotency.counterexample)});
  rows.push_back({"s3-occasionally-idempotent", "occasionally coincidentally idempotent", true,
                  r.idempotency.occasionally});
  rows.push_back({"s3-idempotency-witness", "v with ffv = fv", 1.5, nan_if_empty(r.idempotency.witness), 1e-6});

  const FFunction log_f = FFunction::log();
  const PhiFunction phi = PhiFunction::parse("9/10*t");
  for (int p = 1; p <= 3; ++p) {
    const auto report = certify(ConditionSpec::generalized(log_f, phi, 0.2, p), f, t, SampleGrid{201, 1e-9});
    rows.push_back({"s3-certify-p" + std::to_string(p), "violations at tau=1/5, p=" + std::to_string(p),
                    std::int64_t{0}, static_cast<std::int64_t>(report.violations.size())});
  }
  const auto strict = certify(ConditionSpec::generalized(log_f, phi, 2.0, 1.0), f, t, SampleGrid{201, 1e-9});
  const auto straddles = std::any_of(strict.violations.begin(), strict.violations.end(), [](const Violation& v) {
    return (v.x <= 2.0 && v.y > 2.0) || (v.x > 2.0 && v.y <= 2.0);
  });
  rows.push_back({"s3-certify-tau2", "tau=2 violated with a pair straddling x=2", true,
                  !strict.violations.empty() && straddles});

  const KadelburgTerms k = kadelburg_comparison(f, t, 1.0, 3.0);
  rows.push_back({"s3-kadelburg-H", "H(T1, T3)", 1.5, k.h});
  rows.push_back({"s3-kadelburg-fxfy", "d(f1, f3)", 1.0, k.fx_fy});
  rows.push_back({"s3-kadelburg-half-self", "[d(f1,T1) + d(f3,T3)]/2", 1.25, k.half_self});
  rows.push_back({"s3-kadelburg-half-cross", "[d(f1,T3) + d(f3,T1)]/2", 1.25, k.half_cross});
}

void example13_rows(std::vector<Row>& rows) {
  const Config cfg = load_config("bundled:example-1.3");
  const HybridPair pair = pair_from(cfg, "f");
  const PairPropertyReport r = analyze_pair(pair);
  rows.push_back({"e13-T-at-2", "T(2)", std::string("{1, 3}"), pair.t()(2.0).to_string()});
  rows.push_back({"e13-coincidence", "coincidence points of (f,T)", std::string("{1, 2}"),
                  r.coincidence ? r.coincidence->to_string() : std::string("empty")});
  rows.push_back({"e13-common-fixed", "common fixed points of (f,T)", std::string("{1}"),
                  r.common_fixed ? r.common_fixed->to_string() : std::string("empty")});
  rows.push_back({"e13-commuting", "commuting", false, r.commuting->commuting});
  rows.push_back({"e13-weakly-commuting", "weakly commuting", false, r.commuting->weakly_commuting});
  rows.push_back({"e13-weakly-compatible", "weakly compatible", false, r.commuting->weakly_compatible});
  rows.push_back({"e13-coincidentally-idempotent", "coincidentally idempotent", false,
                  r.idempotency.coincidentally});
  rows.push_back({"e13-idempotency-counterexample", "v with ffv != fv", 2.0,
                  nan_if_empty(r.idempotency.counterexample)});
  rows.push_back({"e13-occasionally-idempotent", "occasionally coincidentally idempotent", true,
                  r.idempotency.occasionally});
  rows.push_back({"e13-idempotency-witness", "v with ffv = fv", 1.0, nan_if_empty(r.idempotency.witness)});
}

void example14_rows(std::vector<Row>& rows) {
  const Config cfg = load_config("bundled:example-1.4");
  const HybridPair fp = pair_from(cfg, "f");
  const HybridPair gp = pair_from(cfg, "g");
  const auto lim = fp.f().one_sided_limits(1.0);
  rows.push_back({"e14-f-at-0.25", "f(1/4)", 1.75, fp.f()(0.25)});
  rows.push_back({"e14-f-left-1", "f(1-)", 1.0, lim.left.value_or(std::nan(""))});
  rows.push_back({"e14-f-at-1", "f(1)", 1.8, lim.at});
  rows.push_back({"e14-f-right-1", "f(1+)", 1.8, lim.right.value_or(std::nan(""))});
  const EaClrReport f_report = detect_ea_clr(fp);
  const EaClrReport g_report = detect_ea_clr(gp);
  rows.push_back({"e14-fT-ea", "(f,T) has property (E.A)", true, f_report.ea, 0.0, witness_text(f_report.ea_witness)});
  rows.push_back({"e14-fT-clr", "(f,T) has the common limit range property", false, f_report.clr, 0.0,
                  witness_text(f_report.clr_witness)});
  rows.push_back({"e14-gT-clr", "(g,T) has the common limit range property", true, g_report.clr, 0.0,
                  witness_text(g_report.clr_witness)});
}

void remark_row(std::vector<Row>& rows) {
  bool holds = true;
  std::string detail = "-";
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"section-3", "f"}, {"example-1.3", "f"}, {"example-1.4", "f"}, {"example-1.4", "g"}};
  for (const auto& [bundle, map] : pairs) {
    const EaClrReport r = detect_ea_clr(pair_from(load_config("bundled:" + bundle), map));
    if (r.ea && r.f_range_closed && !r.clr) {
      holds = false;
      detail = bundle + " (" + map + ",T)";
    }
  }
  rows.push_back({"remark-ea-closed-clr", "(E.A) and closed f(X) imply CLR on every bundled pair", true, holds, 0.0,
                  detail});
}

}  // namespace

int cmd_repro_paper(const RunOptions& opts, Emitter& out) {
  std::vector<Row> rows;
  section3_rows(rows);
  example13_rows(rows);
  example14_rows(rows);
  remark_row(rows);

  if (opts.inject_wrong) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return r.id == *opts.inject_wrong; });
    if (it == rows.end()) throw ConfigError("no repro row named '" + *opts.inject_wrong + "'");
    corrupt(*it);
  }

  std::size_t failed = 0;
  for (const Row& row : rows) {
    const bool pass = matches(row);
    if (!pass) ++failed;
    out.record("repro", {{"id", row.id},
                         {"quantity", row.quantity},
                         {"expected", out.render(row.expected)},
                         {"computed", out.render(row.computed)},
                         {"status", pass ? "pass" : "FAIL"},
                         {"detail", row.detail}});
  }
  out.record("repro-summary", {{"rows", rows.size()}, {"passed", rows.size() - failed}, {"failed", failed}});
  return failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace fplab::cli
