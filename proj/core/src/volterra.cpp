// SPDX-License-Identifier: Apache-2.0
#include "fplab/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "fplab/errors.hpp"
#include "fplab/format.hpp"
#include "random.hpp"

namespace fplab::volterra {

const char* to_string(SelectionRule rule) {
  switch (rule) {
    case SelectionRule::nearest_to_current: return "nearest-to-current";
    case SelectionRule::midpoint: return "midpoint";
    case SelectionRule::lower_end: return "lower-end";
    case SelectionRule::upper_end: return "upper-end";
  }
  return "?";
}

SelectionRule parse_rule(std::string_view text) {
  for (auto rule : {SelectionRule::nearest_to_current, SelectionRule::midpoint, SelectionRule::lower_end,
                    SelectionRule::upper_end})
    if (text == to_string(rule)) return rule;
  throw ParameterError("unknown selection rule '" + std::string(text) + "'");
}

const char* to_string(H3Mode mode) { return mode == H3Mode::hausdorff ? "hausdorff" : "selected-point"; }

H3Mode parse_h3_mode(std::string_view text) {
  if (text == "hausdorff") return H3Mode::hausdorff;
  if (text == "selected-point") return H3Mode::selected_point;
  throw ParameterError("unknown comparison mode '" + std::string(text) + "'");
}

namespace {

void require_arity(std::size_t got, std::size_t want, const char* name) {
  if (got != want)
    throw ParameterError(std::string(name) + " must be an expression in " + std::to_string(want) + " variables");
}

// sigma(t_j) within this distance of a node (in units of cells) is taken
// to be the node.
constexpr double kNodeSnap = 1e-9;

template <class Fn>
void parallel_rows(std::size_t count, std::size_t threads, Fn fn) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t b = 0; b < count; b += chunk) pool.emplace_back(fn, b, std::min(count, b + chunk));
}

}  // namespace

Instance::Instance(Expr q, Expr kernel, Expr sigma, SetExpr f, std::size_t n)
    : q_(std::move(q)), kernel_(std::move(kernel)), sigma_(std::move(sigma)), f_(std::move(f)), n_(n) {
  if (n_ == 0) throw ParameterError("grid size n must be positive");
  require_arity(q_.variables().size(), 1, "q");
  require_arity(kernel_.variables().size(), 2, "kernel");
  require_arity(sigma_.variables().size(), 1, "sigma");
  require_arity(f_.terms().front().values.front().variables().size(), 2, "F");

  const double h = 1.0 / static_cast<double>(n_);
  auto k = [this](double t, double s) {
    const double v = kernel_.eval({t, s});
    if (v < 0.0)
      throw ParameterError("kernel is negative at (" + format_real(t) + ", " + format_real(s) + ")");
    return v;
  };

  std::vector<double> qv(n_ + 1);
  weights_.resize(n_ + 1);
  for (std::size_t j = 0; j <= n_; ++j) {
    const double t = node(j);
    qv[j] = q_.eval(t);
    for (std::size_t i = 0; i <= n_; ++i) kernel_sup_ = std::max(kernel_sup_, k(t, node(i)));

    double s = sigma_.eval(t);
    if (s < -1e-12 || s > 1.0 + 1e-12)
      throw DomainError("sigma(" + format_real(t) + ") = " + format_real(s) + " lies outside [0, 1]");
    s = std::clamp(s, 0.0, 1.0);

    std::vector<double> w;
    const double r = s * static_cast<double>(n_);
    const double rounded = std::round(r);
    std::size_t full = 0;
    double theta = 0.0;
    if (std::abs(r - rounded) <= kNodeSnap) {
      full = static_cast<std::size_t>(rounded);
    } else {
      full = static_cast<std::size_t>(std::floor(r));
      theta = r - static_cast<double>(full);
    }
    w.assign(full + (theta > 0.0 ? 2 : 1), 0.0);
    for (std::size_t i = 0; i < full; ++i) {
      w[i] += 0.5 * h * k(t, node(i));
      w[i + 1] += 0.5 * h * k(t, node(i + 1));
    }
    if (theta > 0.0) {
      const double len = theta * h;
      const double ks = k(t, s);
      w[full] += 0.5 * len * (k(t, node(full)) + ks * (1.0 - theta));
      w[full + 1] += 0.5 * len * ks * theta;
    }
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0.0) weights_[j].push_back({i, w[i]});
  }
  q_values_ = Trajectory(std::move(qv));
}

double Instance::integrate(std::size_t j, std::span<const double> v) const {
  double sum = 0.0;
  for (const Weight& w : weights_.at(j)) sum += w.weight * v[w.node];
  return sum;
}

namespace {

double choose(const ClosedSet& set, double current, SelectionRule rule) {
  switch (rule) {
    case SelectionRule::nearest_to_current: return nearest_point(current, set);
    case SelectionRule::midpoint: return nearest_point(0.5 * (set.min() + set.max()), set);
    case SelectionRule::lower_end: return set.min();
    case SelectionRule::upper_end: return set.max();
  }
  return set.min();
}

void require_size(const Instance& inst, const Trajectory& x) {
  if (x.size() != inst.n() + 1) throw std::invalid_argument("trajectory does not match the time grid");
}

}  // namespace

std::vector<double> select(const Instance& inst, const Trajectory& x, SelectionRule rule) {
  require_size(inst, x);
  std::vector<double> v(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const ClosedSet set = inst.f_at(j, x[j]);
    v[j] = choose(set, x[j], rule);
    if (!set.contains(v[j]))
      throw EvaluationError("selected value " + format_real(v[j]) + " is not in F at node " + std::to_string(j));
  }
  return v;
}

Trajectory apply_inclusion_operator(const Instance& inst, const Trajectory& x, SelectionRule rule,
                                    std::size_t threads) {
  const std::vector<double> v = select(inst, x, rule);
  std::vector<double> out(x.size());
  parallel_rows(out.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) out[j] = inst.q_values()[j] + inst.integrate(j, v);
  });
  return Trajectory(std::move(out));
}

SolveResult solve_inclusion(const Instance& inst, SelectionRule rule, const SolveOptions& options) {
  if (!(options.tol > 0.0)) throw ParameterError("tolerance must be positive");
  SolveResult result;
  Trajectory x = inst.q_values();
  for (std::size_t it = 0; it < options.max_iters; ++it) {
    Trajectory next = apply_inclusion_operator(inst, x, rule, options.threads);
    result.last_step = sup_distance(next, x);
    result.iterations = it + 1;
    x = std::move(next);
    if (result.last_step <= options.tol) {
      result.converged = true;
      break;
    }
  }
  result.residual = sup_distance(x, apply_inclusion_operator(inst, x, rule, options.threads));
  result.x = std::move(x);
  return result;
}

BracketReport check_bracket(const Trajectory& a, const Trajectory& b, const Instance& inst,
                            const std::optional<Trajectory>& solution) {
  constexpr double slack = 1e-9;
  BracketReport report;
  const Trajectory ta = apply_inclusion_operator(inst, a, SelectionRule::lower_end);
  const Trajectory tb = apply_inclusion_operator(inst, b, SelectionRule::upper_end);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > ta[j] + slack) report.lower_violations.push_back(j);
    if (b[j] < tb[j] - slack) report.upper_violations.push_back(j);
  }
  report.lower = report.lower_violations.empty();
  report.upper = report.upper_violations.empty();
  if (solution) {
    require_size(inst, *solution);
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((*solution)[j] < a[j] - slack || (*solution)[j] > b[j] + slack) report.order_violations.push_back(j);
    report.ordered = report.order_violations.empty();
  }
  return report;
}

KernelTau kernel_tau(const Instance& inst) {
  KernelTau out;
  out.sup = inst.kernel_sup();
  // + 0.0 turns -0.0 (sup == 1) into 0.
  out.tau = -std::log(out.sup) + 0.0;
  out.positive = out.tau > 0.0;
  return out;
}

Trajectory delta(const Trajectory& x, const Trajectory& y, const Trajectory& tx, const Trajectory& ty,
                 const HardyRogersWeights& weights) {
  weights.validate();
  if (y.size() != x.size() || tx.size() != x.size() || ty.size() != x.size())
    throw std::invalid_argument("trajectories live on different grids");
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double xy = std::abs(x[j] - y[j]);
    const double xtx = std::abs(x[j] - tx[j]);
    const double yty = std::abs(y[j] - ty[j]);
    const double xty = std::abs(x[j] - ty[j]);
    const double ytx = std::abs(y[j] - tx[j]);
    out[j] = weights.alpha * xy + weights.beta * (1.0 + xtx) * yty / (1.0 + xy) + weights.gamma * (xtx + yty) +
             weights.delta * (xty + ytx);
  }
  return Trajectory(std::move(out));
}

MonotoneReport check_monotone(const Instance& inst, double x_lo, double x_hi, std::uint64_t seed,
                              std::size_t samples) {
  if (!(x_lo < x_hi)) throw ParameterError("monotonicity range must satisfy lo < hi");
  std::mt19937_64 rng(seed);
  MonotoneReport report;
  for (std::size_t m = 0; m < samples; ++m) {
    const std::size_t j = detail::below(rng, inst.n() + 1);
    double x1 = detail::uniform(rng, x_lo, x_hi);
    double x2 = detail::uniform(rng, x_lo, x_hi);
    if (x1 > x2) std::swap(x1, x2);
    if (x1 == x2) continue;
    ++report.samples;
    const ClosedSet a = inst.f_at(j, x1);
    const ClosedSet b = inst.f_at(j, x2);
    if (a.min() > b.min() || a.max() > b.max()) {
      report.holds = false;
      report.counterexample = std::array<double, 3>{inst.node(j), x1, x2};
      break;
    }
  }
  return report;
}

CertificateReport verify_h3(const Instance& inst, double tau, const PhiFunction& phi,
                            const HardyRogersWeights& weights, const H3Sampling& sampling) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ParameterError("tau must be a positive real");
  if (sampling.samples == 0) throw SampleError("hypothesis check needs at least one sample");
  if (!(sampling.lo <= sampling.hi)) throw ParameterError("sample value range must satisfy lo <= hi");
  weights.validate();
  std::mt19937_64 rng(sampling.seed);
  const std::size_t size = inst.n() + 1;
  const double scale = std::exp(-tau);
  CertificateReport report;
  for (std::size_t s = 0; s < sampling.samples; ++s) {
    const Trajectory x(detail::piecewise_constant(rng, size, sampling.lo, sampling.hi, sampling.max_pieces));
    const Trajectory y(detail::piecewise_constant(rng, size, sampling.lo, sampling.hi, sampling.max_pieces));
    const Trajectory tx = apply_inclusion_operator(inst, x, sampling.rule);
    const Trajectory ty = apply_inclusion_operator(inst, y, sampling.rule);
    const Trajectory d = delta(x, y, tx, ty, weights);
    std::vector<double> vx;
    std::vector<double> vy;
    if (sampling.mode == H3Mode::selected_point) {
      vx = select(inst, x, sampling.rule);
      vy = select(inst, y, sampling.rule);
    }
    for (std::size_t j = 0; j < size; ++j) {
      const double lhs = sampling.mode == H3Mode::hausdorff ? hausdorff(inst.f_at(j, x[j]), inst.f_at(j, y[j]))
                                                            : std::abs(vx[j] - vy[j]);
      const double rhs = scale * phi(d[j]);
      ++report.samples;
      const double margin = rhs - lhs;
      if (margin >= 0.0) {
        report.min_margin = report.min_margin ? std::min(*report.min_margin, margin) : margin;
      } else {
        report.violations.push_back({inst.node(j), static_cast<double>(s), lhs, rhs, -margin});
      }
    }
  }
  report.verdict = report.violations.empty() ? Verdict::holds_on_samples : Verdict::violated;
  return report;
}

}  // namespace fplab::volterra
