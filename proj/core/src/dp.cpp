// SPDX-License-Identifier: Apache-2.0
#include "fplab/dp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "fplab/errors.hpp"
#include "fplab/format.hpp"
#include "fplab/sampling.hpp"
#include "random.hpp"

namespace fplab::dp {

namespace {

void require_arity(const Expr& e, std::size_t n, const char* name) {
  if (e.variables().size() != n)
    throw ParameterError(std::string(name) + " must be an expression in " + std::to_string(n) + " variables");
}

void require_which(int which) {
  if (which != 1 && which != 2) throw ParameterError("operator index must be 1 or 2");
}

std::size_t nearest_node(std::span<const double> nodes, double v) {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
  if (it == nodes.begin()) return 0;
  if (it == nodes.end()) return nodes.size() - 1;
  const auto hi = static_cast<std::size_t>(it - nodes.begin());
  return v - nodes[hi - 1] <= nodes[hi] - v ? hi - 1 : hi;
}

}  // namespace

Instance::Instance(ClosedSet w, std::size_t w_points, ClosedSet d, std::size_t d_points, Expr g, Expr g1, Expr g2,
                   Expr tau)
    : states_(uniform_grid(w, std::max<std::size_t>(w_points, 2))),
      decisions_(uniform_grid(d, std::max<std::size_t>(d_points, 2))),
      g_(std::move(g)),
      g1_(std::move(g1)),
      g2_(std::move(g2)),
      tau_(std::move(tau)) {
  require_arity(g_, 2, "g");
  require_arity(g1_, 3, "G1");
  require_arity(g2_, 3, "G2");
  require_arity(tau_, 2, "tau");
  const std::size_t nd = decisions_.size();
  g_values_.resize(states_.size() * nd);
  snap_.resize(states_.size() * nd);
  for (std::size_t i = 0; i < states_.size(); ++i) {
    for (std::size_t j = 0; j < nd; ++j) {
      const double x = states_[i];
      const double y = decisions_[j];
      const double gv = g_.eval({x, y});
      const double tv = tau_.eval({x, y});
      if (!std::isfinite(gv) || !std::isfinite(tv))
        throw EvaluationError("g or tau is not finite at (" + format_real(x) + ", " + format_real(y) + ")");
      const std::size_t s = nearest_node(states_, tv);
      g_values_[i * nd + j] = gv;
      snap_[i * nd + j] = s;
      g_bound_ = std::max(g_bound_, std::abs(gv));
      max_snap_error_ = std::max(max_snap_error_, std::abs(tv - states_[s]));
    }
  }
}

const Expr& Instance::big_g(int which) const {
  require_which(which);
  return which == 1 ? g1_ : g2_;
}

GridFunction bellman_apply(const Instance& inst, int which, const GridFunction& h, std::size_t threads) {
  const Expr& big_g = inst.big_g(which);
  const auto states = inst.states();
  const auto decisions = inst.decisions();
  if (h.size() != states.size()) throw std::invalid_argument("grid function does not match the state grid");

  std::vector<double> out(states.size());
  auto rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < decisions.size(); ++j) {
        const double v = inst.g_at(i, j) + big_g.eval({states[i], decisions[j], h[inst.snap_at(i, j)]});
        best = std::max(best, v);
      }
      out[i] = best;
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, states.size());
  if (workers == 1) {
    rows(0, states.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (states.size() + workers - 1) / workers;
    for (std::size_t b = 0; b < states.size(); b += chunk)
      pool.emplace_back(rows, b, std::min(states.size(), b + chunk));
  }
  return GridFunction(std::move(out));
}

SolveResult solve_successive(const Instance& inst, int which, const GridFunction& h0, const SolveOptions& options) {
  if (!(options.tol > 0.0)) throw ParameterError("tolerance must be positive");
  SolveResult result;
  GridFunction h = h0;
  for (std::size_t k = 0; k < options.max_iters; ++k) {
    GridFunction next = bellman_apply(inst, which, h, options.threads);
    const double step = sup_distance(next, h);
    if (!result.steps.empty() && result.steps.back() > 1e-12)
      result.max_step_ratio = std::max(result.max_step_ratio, step / result.steps.back());
    result.steps.push_back(step);
    h = std::move(next);
    result.iterations = k + 1;
    result.last_step = step;
    if (step <= options.tol) {
      result.converged = true;
      break;
    }
  }
  result.residual = sup_distance(bellman_apply(inst, which, h, options.threads), h);
  result.h = std::move(h);
  return result;
}

std::array<double, 7> theta_terms(const GridFunction& h, const GridFunction& k, const Instance& inst) {
  const GridFunction t1h = bellman_apply(inst, 1, h);
  const GridFunction t1k = bellman_apply(inst, 1, k);
  const GridFunction t2h = bellman_apply(inst, 2, h);
  const GridFunction t2k = bellman_apply(inst, 2, k);
  const double d_t2h_t2k = sup_distance(t2h, t2k);
  const double d_t1h_t2k = sup_distance(t1h, t2k);
  const double d_t1k_t2h = sup_distance(t1k, t2h);
  const double d_t1h_t2h = sup_distance(t1h, t2h);
  const double d_t1k_t2k = sup_distance(t1k, t2k);
  const double d_t1h_t1k = sup_distance(t1h, t1k);
  return {
      d_t2h_t2k,
      d_t1h_t2h,
      d_t1k_t2k,
      (d_t1h_t2k + d_t1k_t2h) / 2.0,
      d_t1h_t2h * d_t1k_t2k / (1.0 + d_t2h_t2k),
      d_t1h_t2k * d_t1k_t2h / (1.0 + d_t2h_t2k),
      d_t1h_t2k * d_t1k_t2h / (1.0 + d_t1h_t1k),
  };
}

double theta(const GridFunction& h, const GridFunction& k, const Instance& inst) {
  const auto terms = theta_terms(h, k, inst);
  return *std::max_element(terms.begin(), terms.end());
}

CertificateReport hypothesis1_at(const Instance& inst, double tau, const PhiFunction& phi, const GridFunction& h,
                                 const GridFunction& k) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ParameterError("tau must be a positive real");
  const auto states = inst.states();
  const auto decisions = inst.decisions();
  if (h.size() != states.size() || k.size() != states.size())
    throw std::invalid_argument("grid function does not match the state grid");

  const double rhs = std::exp(-tau) * phi(theta(h, k, inst));
  CertificateReport report;
  std::optional<Violation> worst;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < decisions.size(); ++j) {
      const double x = states[i];
      const double y = decisions[j];
      const double lhs = std::abs(inst.big_g(1).eval({x, y, h[i]}) - inst.big_g(2).eval({x, y, k[i]}));
      ++report.samples;
      const double margin = rhs - lhs;
      if (margin >= 0.0) {
        report.min_margin = report.min_margin ? std::min(*report.min_margin, margin) : margin;
      } else if (!worst || -margin > worst->gap) {
        worst = Violation{x, y, lhs, rhs, -margin};
      }
    }
  }
  if (worst) {
    report.violations.push_back(*worst);
    report.verdict = Verdict::violated;
  }
  return report;
}

GridFunction random_grid_function(std::size_t size, const HypothesisSampling& sampling, std::mt19937_64& rng) {
  return GridFunction(detail::piecewise_constant(rng, size, sampling.lo, sampling.hi, sampling.max_pieces));
}

CertificateReport verify_hypothesis1(const Instance& inst, double tau, const PhiFunction& phi,
                                     const HypothesisSampling& sampling) {
  if (sampling.samples == 0) throw SampleError("hypothesis check needs at least one sample");
  if (!(sampling.lo <= sampling.hi)) throw ParameterError("sample value range must satisfy lo <= hi");
  std::mt19937_64 rng(sampling.seed);
  CertificateReport report;
  const std::size_t n = inst.states().size();
  for (std::size_t s = 0; s < sampling.samples; ++s) {
    const GridFunction h = random_grid_function(n, sampling, rng);
    const GridFunction k = random_grid_function(n, sampling, rng);
    const CertificateReport part = hypothesis1_at(inst, tau, phi, h, k);
    report.samples += part.samples;
    report.violations.insert(report.violations.end(), part.violations.begin(), part.violations.end());
    if (part.min_margin)
      report.min_margin = report.min_margin ? std::min(*report.min_margin, *part.min_margin) : *part.min_margin;
  }
  report.verdict = report.violations.empty() ? Verdict::holds_on_samples : Verdict::violated;
  return report;
}

PosteriorReport check_posterior(const Instance& inst, const GridFunction& h, double tol) {
  PosteriorReport report;
  const GridFunction t1h = bellman_apply(inst, 1, h);
  report.coincidence_gap = sup_distance(t1h, bellman_apply(inst, 2, h));
  report.coincide = report.coincidence_gap <= tol;
  report.idempotency_gap = sup_distance(bellman_apply(inst, 1, t1h), t1h);
  report.idempotent = report.idempotency_gap <= tol;
  return report;
}

double big_g_bound(const Instance& inst, int which, double z_lo, double z_hi, std::size_t z_points) {
  const Expr& big_g = inst.big_g(which);
  const std::size_t nz = std::max<std::size_t>(z_points, 2);
  double bound = 0.0;
  for (double x : inst.states())
    for (double y : inst.decisions())
      for (std::size_t m = 0; m < nz; ++m) {
        const double z = m + 1 == nz ? z_hi : z_lo + (z_hi - z_lo) * static_cast<double>(m) / static_cast<double>(nz - 1);
        bound = std::max(bound, std::abs(big_g.eval({x, y, z})));
      }
  return bound;
}

}  // namespace fplab::dp
