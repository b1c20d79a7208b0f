// SPDX-License-Identifier: Apache-2.0
#include "fplab/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "fplab/errors.hpp"
#include "fplab/format.hpp"

namespace fplab {

void HardyRogersWeights::validate() const {
  if (alpha < 0.0 || beta < 0.0 || gamma < 0.0 || delta < 0.0)
    throw ParameterError("Hardy-Rogers weights must be non-negative");
  if (alpha + beta + 2.0 * gamma + 2.0 * delta > 1.0)
    throw ParameterError("Hardy-Rogers weights need alpha + beta + 2 gamma + 2 delta <= 1");
}

namespace {

void require_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ParameterError("tau must be a positive real");
}

void require_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw ParameterError("exponent p must be >= 1");
}

}  // namespace

ConditionSpec ConditionSpec::nadler(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw ParameterError("Nadler factor lambda must lie in [0, 1)");
  ConditionSpec out(Kind::nadler);
  out.lambda_ = lambda;
  return out;
}

ConditionSpec ConditionSpec::wardowski(FFunction f, double tau) {
  require_tau(tau);
  ConditionSpec out(Kind::wardowski);
  out.f_ = std::move(f);
  out.tau_ = tau;
  return out;
}

ConditionSpec ConditionSpec::sgroi(FFunction f, double tau) {
  require_tau(tau);
  ConditionSpec out(Kind::sgroi);
  out.f_ = std::move(f);
  out.tau_ = tau;
  return out;
}

ConditionSpec ConditionSpec::generalized(FFunction f, PhiFunction phi, double tau, double p) {
  require_tau(tau);
  require_p(p);
  ConditionSpec out(Kind::generalized);
  out.f_ = std::move(f);
  out.phi_ = std::move(phi);
  out.tau_ = tau;
  out.p_ = p;
  return out;
}

ConditionSpec ConditionSpec::hardy_rogers(FFunction f, PhiFunction phi, double tau, double p,
                                          HardyRogersWeights weights) {
  require_tau(tau);
  require_p(p);
  weights.validate();
  ConditionSpec out(Kind::hardy_rogers);
  out.f_ = std::move(f);
  out.phi_ = std::move(phi);
  out.tau_ = tau;
  out.p_ = p;
  out.weights_ = weights;
  return out;
}

const char* to_string(ConditionSpec::Kind kind) {
  switch (kind) {
    case ConditionSpec::Kind::nadler:
      return "nadler";
    case ConditionSpec::Kind::wardowski:
      return "wardowski";
    case ConditionSpec::Kind::sgroi:
      return "sgroi";
    case ConditionSpec::Kind::generalized:
      return "generalized";
    case ConditionSpec::Kind::hardy_rogers:
      return "hardy-rogers";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  return verdict == Verdict::holds_on_samples ? "holds-on-samples" : "violated";
}

namespace {

double raise(double value, double p) { return p == 1.0 ? value : std::pow(value, p); }

struct Sample {
  double x;
  double fx;
  ClosedSet tx;
};

PairDistances distances(const Sample& a, const Sample& b, double p) {
  PairDistances d;
  d.fx_tx = raise(point_set_distance(a.fx, a.tx), p);
  d.fy_ty = raise(point_set_distance(b.fx, b.tx), p);
  d.fx_fy = raise(std::fabs(a.fx - b.fx), p);
  d.fx_ty = raise(point_set_distance(a.fx, b.tx), p);
  d.fy_tx = raise(point_set_distance(b.fx, a.tx), p);
  d.tx_ty = raise(hausdorff(a.tx, b.tx), p);
  return d;
}

Sample sample_at(double x, const PiecewiseMap& f, const PiecewiseSetMap& t) { return {x, f(x), t(x)}; }

}  // namespace

PairDistances pair_distances(double x, double y, const PiecewiseMap& f, const PiecewiseSetMap& t, double p) {
  require_p(p);
  return distances(sample_at(x, f, t), sample_at(y, f, t), p);
}

double generalized_max_term(const PairDistances& d) {
  const double cross = d.fx_ty * d.fy_tx;
  return std::max({d.fx_tx, d.fy_ty, d.fx_fy, 0.5 * (d.fx_ty + d.fy_tx), d.fx_tx * d.fy_ty / (1.0 + d.fx_fy),
                   cross / (1.0 + d.fx_fy), cross / (1.0 + d.tx_ty)});
}

double generalized_max_term(double x, double y, const PiecewiseMap& f, const PiecewiseSetMap& t, double p) {
  return generalized_max_term(pair_distances(x, y, f, t, p));
}

double hardy_rogers_rhs_arg(const PairDistances& d, const HardyRogersWeights& w) {
  return w.alpha * d.fx_fy + w.beta * (1.0 + d.fx_tx) * d.fy_ty / (1.0 + d.fx_fy) + w.gamma * (d.fx_tx + d.fy_ty) +
         w.delta * (d.fx_ty + d.fy_tx);
}

double hardy_rogers_rhs_arg(double x, double y, const PiecewiseMap& f, const PiecewiseSetMap& t, double p,
                            const HardyRogersWeights& w) {
  w.validate();
  return hardy_rogers_rhs_arg(pair_distances(x, y, f, t, p), w);
}

double sgroi_m(double x, double y, const PiecewiseSetMap& t) {
  const ClosedSet tx = t(x);
  const ClosedSet ty = t(y);
  return std::max({std::fabs(x - y), point_set_distance(x, tx), point_set_distance(y, ty),
                   0.5 * (point_set_distance(x, ty) + point_set_distance(y, tx))});
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Tally for a contiguous block of rows; blocks are merged in row order.
struct Tally {
  std::size_t samples = 0;
  std::size_t skipped = 0;
  std::vector<Violation> violations;
  std::optional<double> min_margin;

  void skip() { ++skipped; }

  void record(double x, double y, double lhs, double rhs) {
    ++samples;
    if (lhs <= rhs) {
      double margin = rhs - lhs;
      min_margin = min_margin ? std::min(*min_margin, margin) : margin;
    } else {
      violations.push_back({x, y, lhs, rhs, lhs - rhs});
    }
  }
};

using RowFunction = std::function<void(std::size_t, Tally&)>;

CertificateReport scan(std::size_t rows, unsigned threads, const RowFunction& row) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(rows, 1))));
  std::vector<Tally> blocks(threads);
  auto run_block = [&](unsigned b) {
    std::size_t begin = rows * b / threads;
    std::size_t end = rows * (b + 1) / threads;
    for (std::size_t i = begin; i < end; ++i) row(i, blocks[b]);
  };
  if (threads == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned b = 0; b < threads; ++b) workers.emplace_back(run_block, b);
  }
  CertificateReport report;
  for (Tally& block : blocks) {
    report.samples += block.samples;
    report.skipped += block.skipped;
    report.violations.insert(report.violations.end(), block.violations.begin(), block.violations.end());
    if (block.min_margin)
      report.min_margin = report.min_margin ? std::min(*report.min_margin, *block.min_margin) : *block.min_margin;
  }
  if (report.samples == 0)
    throw SampleError("no sample pair with a positive left-hand distance; the condition is vacuous on this grid");
  report.verdict = report.violations.empty() ? Verdict::holds_on_samples : Verdict::violated;
  return report;
}

std::vector<Sample> build_samples(const ConditionSpec& condition, const PiecewiseMap& f, const PiecewiseSetMap& t,
                                  const SampleGrid& grid) {
  const bool uses_f = condition.kind() == ConditionSpec::Kind::generalized ||
                      condition.kind() == ConditionSpec::Kind::hardy_rogers;
  if (uses_f && !(f.domain() == t.domain()))
    throw DomainError("f and T must share a domain: " + f.domain().to_string() + " vs " + t.domain().to_string());
  std::vector<double> breaks = t.breakpoints();
  if (uses_f) {
    auto fb = f.breakpoints();
    breaks.insert(breaks.end(), fb.begin(), fb.end());
  }
  std::vector<Sample> samples;
  for (double x : sample_points(t.domain(), breaks, grid)) {
    samples.push_back({x, uses_f ? f(x) : x, t(x)});
  }
  return samples;
}

// F(phi(argument)), with -inf when phi(argument) is not positive.
double f_of_phi(const FFunction& F, const PhiFunction& phi, double argument) {
  double value = phi(argument);
  return value > 0.0 ? F(value) : kNegInf;
}

double rhs_argument(const ConditionSpec& condition, const PairDistances& d) {
  return condition.kind() == ConditionSpec::Kind::generalized ? generalized_max_term(d)
                                                               : hardy_rogers_rhs_arg(d, condition.weights());
}

}  // namespace

CertificateReport certify(const ConditionSpec& condition, const PiecewiseMap& f, const PiecewiseSetMap& t,
                          const SampleGrid& grid, const CertifyOptions& options) {
  const std::vector<Sample> samples = build_samples(condition, f, t, grid);
  const std::size_t n = samples.size();
  const double tau = condition.tau();

  switch (condition.kind()) {
    case ConditionSpec::Kind::nadler: {
      const double lambda = condition.lambda();
      return scan(n, options.threads, [&](std::size_t i, Tally& tally) {
        for (std::size_t j = 0; j < n; ++j) {
          double h = hausdorff(samples[i].tx, samples[j].tx);
          if (h == 0.0) {
            tally.skip();
            continue;
          }
          tally.record(samples[i].x, samples[j].x, h, lambda * std::fabs(samples[i].x - samples[j].x));
        }
      });
    }
    case ConditionSpec::Kind::wardowski: {
      for (const Sample& s : samples) {
        if (!s.tx.is_singleton())
          throw UnsupportedError("wardowski condition needs a single-valued T; T(" + format_real(s.x) +
                                 ") = " + s.tx.to_string());
      }
      const FFunction& F = *condition.f_function();
      return scan(n, options.threads, [&](std::size_t i, Tally& tally) {
        for (std::size_t j = 0; j < n; ++j) {
          double d = std::fabs(samples[i].tx.min() - samples[j].tx.min());
          if (d == 0.0) {
            tally.skip();
            continue;
          }
          tally.record(samples[i].x, samples[j].x, tau + F(d), F(std::fabs(samples[i].x - samples[j].x)));
        }
      });
    }
    case ConditionSpec::Kind::sgroi: {
      // y ranges over the endpoints of Tx; z is the metric projection of y
      // onto Ty, the best choice of the existential z.
      const FFunction& F = *condition.f_function();
      return scan(n, options.threads, [&](std::size_t i, Tally& tally) {
        const double x = samples[i].x;
        for (double y : samples[i].tx.endpoints()) {
          const ClosedSet ty = t(y);
          const double z = nearest_point(y, ty);
          const double d = std::fabs(y - z);
          if (d == 0.0) {
            tally.skip();
            continue;
          }
          const double m = std::max({std::fabs(x - y), point_set_distance(x, samples[i].tx),
                                     point_set_distance(y, ty),
                                     0.5 * (point_set_distance(x, ty) + point_set_distance(y, samples[i].tx))});
          tally.record(x, y, tau + F(d), m > 0.0 ? F(m) : kNegInf);
        }
      });
    }
    case ConditionSpec::Kind::generalized:
    case ConditionSpec::Kind::hardy_rogers: {
      const FFunction& F = *condition.f_function();
      const PhiFunction& phi = *condition.phi();
      const double p = condition.p();
      return scan(n, options.threads, [&](std::size_t i, Tally& tally) {
        for (std::size_t j = 0; j < n; ++j) {
          PairDistances d = distances(samples[i], samples[j], p);
          if (d.tx_ty == 0.0) {
            tally.skip();
            continue;
          }
          tally.record(samples[i].x, samples[j].x, tau + F(d.tx_ty), f_of_phi(F, phi, rhs_argument(condition, d)));
        }
      });
    }
  }
  throw UnsupportedError("unknown condition kind");
}

CertificateReport certify_exponential_form(const ConditionSpec& condition, const PiecewiseMap& f,
                                           const PiecewiseSetMap& t, const SampleGrid& grid,
                                           const CertifyOptions& options) {
  if (condition.kind() != ConditionSpec::Kind::generalized && condition.kind() != ConditionSpec::Kind::hardy_rogers)
    throw UnsupportedError("exponential form exists for generalized and hardy-rogers conditions only");
  if (condition.f_function()->kind() != FFunction::Kind::log)
    throw UnsupportedError("exponential form requires F = ln");
  const std::vector<Sample> samples = build_samples(condition, f, t, grid);
  const std::size_t n = samples.size();
  const double factor = std::exp(-condition.tau());
  const PhiFunction& phi = *condition.phi();
  const double p = condition.p();
  return scan(n, options.threads, [&](std::size_t i, Tally& tally) {
    for (std::size_t j = 0; j < n; ++j) {
      PairDistances d = distances(samples[i], samples[j], p);
      if (d.tx_ty == 0.0) {
        tally.skip();
        continue;
      }
      tally.record(samples[i].x, samples[j].x, d.tx_ty, factor * phi(rhs_argument(condition, d)));
    }
  });
}

KadelburgTerms kadelburg_comparison(const PiecewiseMap& f, const PiecewiseSetMap& t, double x, double y) {
  const double fx = f(x);
  const double fy = f(y);
  const ClosedSet tx = t(x);
  const ClosedSet ty = t(y);
  KadelburgTerms out;
  out.h = hausdorff(tx, ty);
  out.fx_fy = std::fabs(fx - fy);
  out.half_self = 0.5 * (point_set_distance(fx, tx) + point_set_distance(fy, ty));
  out.half_cross = 0.5 * (point_set_distance(fx, ty) + point_set_distance(fy, tx));
  out.max_rhs = std::max({out.fx_fy, out.half_self, out.half_cross});
  return out;
}

}  // namespace fplab
