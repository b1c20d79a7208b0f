// SPDX-License-Identifier: Apache-2.0
#include "fplab/families.hpp"

#include <cmath>
#include <limits>

#include "fplab/errors.hpp"
#include "random.hpp"

namespace fplab {

FFunction::FFunction(Kind kind, double k, std::optional<Expr> expression)
    : kind_(kind), k_(k), expression_(std::move(expression)) {
  if (!(k_ > 0.0 && k_ < 1.0)) throw ParameterError("F-function exponent k must lie in (0, 1)");
}

FFunction FFunction::log() { return FFunction(Kind::log, 0.5, std::nullopt); }
FFunction FFunction::log_linear() { return FFunction(Kind::log_linear, 0.5, std::nullopt); }
FFunction FFunction::neg_inv_sqrt() { return FFunction(Kind::neg_inv_sqrt, 0.8, std::nullopt); }

FFunction FFunction::custom(Expr expression, double k) {
  if (expression.variables().size() != 1)
    throw ParameterError("custom F must be an expression in one variable");
  return FFunction(Kind::custom, k, std::move(expression));
}

FFunction FFunction::parse(std::string_view text) {
  if (text == "log" || text == "ln") return log();
  if (text == "log-linear") return log_linear();
  if (text == "neg-inv-sqrt") return neg_inv_sqrt();
  return custom(parse_expr(text, {"t"}), 0.5);
}

double FFunction::operator()(double t) const {
  if (t < 0.0 || std::isnan(t)) throw ParameterError("F is defined on (0, inf) only");
  if (t == 0.0) return -std::numeric_limits<double>::infinity();
  switch (kind_) {
    case Kind::log:
      return std::log(t);
    case Kind::log_linear:
      return t + std::log(t);
    case Kind::neg_inv_sqrt:
      return -1.0 / std::sqrt(t);
    case Kind::custom:
      return expression_->eval(t);
  }
  return std::nan("");
}

std::string FFunction::name() const {
  switch (kind_) {
    case Kind::log:
      return "log";
    case Kind::log_linear:
      return "log-linear";
    case Kind::neg_inv_sqrt:
      return "neg-inv-sqrt";
    case Kind::custom:
      return expression_->to_string();
  }
  return "?";
}

FAxiomReport check_axioms(const FFunction& f, std::uint64_t seed, std::size_t pairs) {
  FAxiomReport report;
  std::mt19937_64 rng(seed);
  while (report.monotone_pairs < pairs) {
    double s = std::pow(10.0, detail::uniform(rng, -6.0, 6.0));
    double t = std::pow(10.0, detail::uniform(rng, -6.0, 6.0));
    if (s == t) continue;
    if (s > t) std::swap(s, t);
    ++report.monotone_pairs;
    if (!(f(s) < f(t)) && report.monotone) {
      report.monotone = false;
      report.monotone_counterexample = s;
    }
  }
  const double beta = std::ldexp(1.0, -40);
  report.f2_value = f(beta);
  report.f2 = report.f2_value < -20.0;
  report.f3_value = std::pow(beta, f.k()) * f(beta);
  report.f3 = std::fabs(report.f3_value) < 1e-3;
  return report;
}

PhiFunction::PhiFunction(Expr expression) : expression_(std::move(expression)) {
  if (expression_.variables().size() != 1) throw ParameterError("phi must be an expression in one variable");
}

PhiFunction PhiFunction::parse(std::string_view text) { return PhiFunction(parse_expr(text, {"t"})); }

PhiReport check_phi(const PhiFunction& phi, std::size_t samples) {
  if (samples < 2) throw ParameterError("check_phi needs at least 2 samples");
  PhiReport report;
  double previous = phi(0.0);
  if (!(previous >= 0.0)) {
    report.nonnegative = false;
    report.counterexample = 0.0;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    double exponent = -9.0 + 18.0 * static_cast<double>(i) / static_cast<double>(samples - 1);
    double t = std::pow(10.0, exponent);
    double value = phi(t);
    ++report.samples;
    const bool below = value < t;
    const bool nonnegative = value >= 0.0;
    const bool nondecreasing = value >= previous;
    report.below_identity = report.below_identity && below;
    report.nonnegative = report.nonnegative && nonnegative;
    report.nondecreasing = report.nondecreasing && nondecreasing;
    if (!(below && nonnegative && nondecreasing) && !report.counterexample) report.counterexample = t;
    previous = value;
  }
  return report;
}

}  // namespace fplab
