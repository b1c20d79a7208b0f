// SPDX-License-Identifier: Apache-2.0
#include "fplab/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fplab/errors.hpp"
#include "fplab/format.hpp"
#include "fplab/sampling.hpp"

namespace fplab {

const char* to_string(SpaceKind kind) { return kind == SpaceKind::finite ? "finite" : "interval"; }

const char* to_string(Side side) {
  switch (side) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::at: return "at";
  }
  return "?";
}

HybridPair::HybridPair(PiecewiseMap f, PiecewiseSetMap t, std::size_t validation_points)
    : f_(std::move(f)), t_(std::move(t)) {
  if (!(f_.domain() == t_.domain()))
    throw DomainError("f and T must share a domain: " + f_.domain().to_string() + " vs " + t_.domain().to_string());
  kind_ = f_.is_finite_space() ? SpaceKind::finite : SpaceKind::interval;

  const double tol = kind_ == SpaceKind::finite ? 0.0 : kPointTolerance;
  const auto bps = breakpoints();
  for (double x : sample_points(domain(), bps, SampleGrid{validation_points, 1e-9})) {
    const double fx = f_(x);
    if (point_set_distance(fx, domain()) > tol)
      throw DomainError("f maps " + format_real(x) + " to " + format_real(fx) + ", outside the domain");
    const ClosedSet tx = t_(x);
    if (!tx.subset_of(domain(), tol))
      throw DomainError("T(" + format_real(x) + ") = " + tx.to_string() + " is not contained in the domain");
  }
}

std::vector<double> HybridPair::breakpoints() const {
  auto out = f_.breakpoints();
  const auto more = t_.breakpoints();
  out.insert(out.end(), more.begin(), more.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void require_resolution(double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) throw ParameterError("resolution must be positive");
}

std::vector<double> scan_points(const HybridPair& pair, double resolution) {
  if (pair.kind() == SpaceKind::finite) return pair.domain().endpoints();
  const double span = pair.domain().max() - pair.domain().min();
  const auto n = static_cast<std::size_t>(std::ceil(span / resolution)) + 1;
  const auto bps = pair.breakpoints();
  return sample_points(pair.domain(), bps, SampleGrid{std::max<std::size_t>(n, 2), 1e-9});
}

bool is_coincidence(const HybridPair& pair, double x) {
  const double fx = pair.f()(x);
  const ClosedSet tx = pair.t()(x);
  if (pair.kind() == SpaceKind::finite) return tx.contains(fx);
  return point_set_distance(fx, tx) <= kPointTolerance;
}

bool is_fixed(const HybridPair& pair, double x) {
  const double fx = pair.f()(x);
  if (pair.kind() == SpaceKind::finite) return fx == x;
  return std::abs(fx - x) <= kPointTolerance;
}

// Joins runs of consecutive hits among `candidates` whose spacing does not
// exceed the resolution. `hit` is parallel to `candidates`.
std::optional<ClosedSet> merge_hits(const std::vector<double>& candidates, const std::vector<bool>& hit,
                                    double resolution, bool finite) {
  std::vector<Interval> pieces;
  bool open_run = false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!hit[i]) {
      open_run = false;
      continue;
    }
    const double x = candidates[i];
    if (!finite && open_run && x - pieces.back().hi <= resolution * (1.0 + 1e-6)) {
      pieces.back().hi = x;
    } else {
      pieces.push_back({x, x});
    }
    open_run = true;
  }
  if (pieces.empty()) return std::nullopt;
  return ClosedSet(std::move(pieces));
}

// Root of g on [a, b] given a sign change; returns the better end when the
// bracket collapses.
template <class G>
double bisect(const G& g, double a, double b) {
  double ga = g(a);
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double gm = g(m);
    if (gm == 0.0) return m;
    if ((gm < 0.0) == (ga < 0.0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return std::abs(g(a)) <= std::abs(g(b)) ? a : b;
}

}  // namespace

std::vector<double> coincidence_hits(const HybridPair& pair, double resolution) {
  require_resolution(resolution);
  std::vector<double> out;
  for (double x : scan_points(pair, resolution))
    if (is_coincidence(pair, x)) out.push_back(x);
  return out;
}

std::optional<ClosedSet> coincidence_points(const HybridPair& pair, double resolution) {
  require_resolution(resolution);
  const auto candidates = scan_points(pair, resolution);
  std::vector<bool> hit(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) hit[i] = is_coincidence(pair, candidates[i]);
  return merge_hits(candidates, hit, resolution, pair.kind() == SpaceKind::finite);
}

std::optional<ClosedSet> common_fixed_points(const HybridPair& pair, double resolution) {
  require_resolution(resolution);
  auto candidates = scan_points(pair, resolution);
  if (pair.kind() == SpaceKind::interval) {
    // Roots of f(x) - x strictly between neighbouring nodes of one piece.
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
      const double a = candidates[i];
      const double b = candidates[i + 1];
      const auto ia = pair.f().piece_index(a);
      if (!ia || ia != pair.f().piece_index(b)) continue;
      const double ga = pair.f()(a) - a;
      const double gb = pair.f()(b) - b;
      if (ga == 0.0 || gb == 0.0 || (ga < 0.0) == (gb < 0.0)) continue;
      const Expr& e = pair.f().pieces()[*ia].expression;
      const double r = bisect([&e](double x) { return e.eval(x) - x; }, a, b);
      if (r > a && r < b) roots.push_back(r);
    }
    candidates.insert(candidates.end(), roots.begin(), roots.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }
  std::vector<bool> hit(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    hit[i] = is_fixed(pair, candidates[i]) && is_coincidence(pair, candidates[i]);
  return merge_hits(candidates, hit, resolution, pair.kind() == SpaceKind::finite);
}

IdempotencyReport check_idempotency(const HybridPair& pair, double resolution) {
  IdempotencyReport report;
  const bool finite = pair.kind() == SpaceKind::finite;
  for (double v : coincidence_hits(pair, resolution)) {
    const double fv = pair.f()(v);
    // fv may sit a rounding error outside the domain on interval spaces.
    const double ffv = pair.f()(nearest_point(fv, pair.domain()));
    const bool same = finite ? ffv == fv : std::abs(ffv - fv) <= kPointTolerance;
    if (same && !report.occasionally) {
      report.occasionally = true;
      report.witness = v;
    }
    if (!same && report.coincidentally) {
      report.coincidentally = false;
      report.counterexample = v;
    }
  }
  return report;
}

CommutingReport check_commuting(const HybridPair& pair) {
  if (pair.kind() != SpaceKind::finite)
    throw UnsupportedError("commutativity checks are only decided on finite spaces");
  CommutingReport report;
  for (double x : pair.domain().endpoints()) {
    const double fx = pair.f()(x);
    const ClosedSet tx = pair.t()(x);
    std::vector<double> image;
    for (double t : tx.endpoints()) image.push_back(pair.f()(t));
    const ClosedSet ftx = ClosedSet::finite(image);
    const ClosedSet tfx = pair.t()(fx);

    if (report.commuting && !ftx.subset_of(tfx)) {
      report.commuting = false;
      report.commuting_counterexample = x;
    }
    if (report.weakly_commuting && hausdorff(ftx, tfx) > point_set_distance(fx, tx)) {
      report.weakly_commuting = false;
      report.weakly_commuting_counterexample = x;
    }
    if (report.weakly_compatible && tx.contains(fx) && !(ftx == tfx)) {
      report.weakly_compatible = false;
      report.weakly_compatible_counterexample = x;
    }
  }
  return report;
}

bool FunctionRange::contains(double t, double tol) const {
  for (const auto& p : pieces) {
    const bool above = p.lo_closed ? t >= p.lo - tol : t > p.lo + tol;
    const bool below = p.hi_closed ? t <= p.hi + tol : t < p.hi - tol;
    if (above && below) return true;
  }
  return false;
}

bool FunctionRange::closed() const {
  return std::all_of(pieces.begin(), pieces.end(), [](const Piece& p) { return p.lo_closed && p.hi_closed; });
}

namespace {

constexpr int kMonotoneSamples = 65;
constexpr int kDenseSamples = 10001;

enum class Trend { constant, increasing, decreasing, mixed };

Trend trend_of(const Expr& e, const Condition& c) {
  bool up = false;
  bool down = false;
  double prev = e.eval(c.lo);
  for (int i = 1; i < kMonotoneSamples; ++i) {
    const double x = i + 1 == kMonotoneSamples ? c.hi : c.lo + (c.hi - c.lo) * i / (kMonotoneSamples - 1);
    const double v = e.eval(x);
    if (v > prev) up = true;
    if (v < prev) down = true;
    prev = v;
  }
  if (up && down) return Trend::mixed;
  if (up) return Trend::increasing;
  if (down) return Trend::decreasing;
  return Trend::constant;
}

FunctionRange::Piece piece_image(const Expr& e, const Condition& c, bool& approximate) {
  if (c.degenerate()) {
    const double v = e.eval(c.lo);
    return {v, v, true, true};
  }
  switch (trend_of(e, c)) {
    case Trend::constant: {
      const double v = e.eval(c.lo);
      return {v, v, true, true};
    }
    case Trend::increasing: return {e.eval(c.lo), e.eval(c.hi), c.lo_closed, c.hi_closed};
    case Trend::decreasing: return {e.eval(c.hi), e.eval(c.lo), c.hi_closed, c.lo_closed};
    case Trend::mixed: break;
  }
  approximate = true;
  double lo = e.eval(c.lo);
  double hi = lo;
  for (int i = 1; i < kDenseSamples; ++i) {
    const double v = e.eval(c.lo + (c.hi - c.lo) * i / (kDenseSamples - 1));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi, true, true};
}

}  // namespace

FunctionRange function_range(const PiecewiseMap& f) {
  FunctionRange out;
  std::vector<FunctionRange::Piece> raw;
  for (const auto& piece : f.pieces()) raw.push_back(piece_image(piece.expression, piece.condition, out.approximate));
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  for (const auto& p : raw) {
    if (!out.pieces.empty()) {
      auto& back = out.pieces.back();
      const bool joins = p.lo < back.hi || (p.lo == back.hi && (back.hi_closed || p.lo_closed));
      if (joins) {
        if (p.hi > back.hi) {
          back.hi = p.hi;
          back.hi_closed = p.hi_closed;
        } else if (p.hi == back.hi) {
          back.hi_closed = back.hi_closed || p.hi_closed;
        }
        continue;
      }
    }
    out.pieces.push_back(p);
  }
  return out;
}

std::optional<double> preimage(const PiecewiseMap& f, double t) {
  for (const auto& piece : f.pieces()) {
    const Condition& c = piece.condition;
    const Expr& e = piece.expression;
    // Dense enough to catch sign changes of non-monotone pieces.
    const int n = c.degenerate() ? 1 : kMonotoneSamples;
    double prev_x = c.lo;
    double prev_g = e.eval(c.lo) - t;
    for (int i = 0; i < n; ++i) {
      const double x = i + 1 == n ? c.hi : c.lo + (c.hi - c.lo) * i / (n - 1);
      const double g = e.eval(x) - t;
      double u = x;
      if (std::abs(g) > kPointTolerance) {
        if (i == 0 || (g < 0.0) == (prev_g < 0.0)) {
          prev_x = x;
          prev_g = g;
          continue;
        }
        u = bisect([&e, t](double z) { return e.eval(z) - t; }, prev_x, x);
      }
      if (c.contains(u) && std::abs(f(u) - t) <= kPointTolerance) return u;
      prev_x = x;
      prev_g = g;
    }
  }
  return std::nullopt;
}

std::optional<LimitWitness> limit_witness(const HybridPair& pair, double x0, Side side) {
  const auto fl = pair.f().one_sided_limits(x0);
  const auto tl = pair.t().one_sided_limits(x0);
  std::optional<double> t;
  std::optional<ClosedSet> a;
  switch (side) {
    case Side::left:
      t = fl.left;
      a = tl.left;
      break;
    case Side::right:
      t = fl.right;
      a = tl.right;
      break;
    case Side::at:
      t = fl.at;
      a = tl.at;
      break;
  }
  if (!t || !a) return std::nullopt;
  const bool finite = pair.kind() == SpaceKind::finite;
  if (finite ? !a->contains(*t) : point_set_distance(*t, *a) > kPointTolerance) return std::nullopt;
  LimitWitness w{x0, side, *t, *a, std::nullopt};
  if (finite) {
    // Only the constant sequence exists on an isolated point.
    for (double u : pair.domain().endpoints())
      if (pair.f()(u) == *t) {
        w.u = u;
        break;
      }
  } else if (function_range(pair.f()).contains(*t)) {
    w.u = preimage(pair.f(), *t);
  }
  return w;
}

EaClrReport detect_ea_clr(const HybridPair& pair, std::size_t grid_points) {
  EaClrReport report;
  if (pair.kind() == SpaceKind::finite) {
    // Convergent sequences are eventually constant, so both properties
    // amount to a coincidence point.
    report.f_range_closed = true;
    for (double x : pair.domain().endpoints()) {
      if (auto w = limit_witness(pair, x, Side::at)) {
        w->u = x;
        report.ea = report.clr = true;
        report.ea_witness = report.clr_witness = w;
        break;
      }
    }
    return report;
  }

  const FunctionRange range = function_range(pair.f());
  report.f_range_closed = range.closed();
  report.range_approximate = range.approximate;

  std::vector<double> candidates = pair.breakpoints();
  const auto grid = uniform_grid(pair.domain(), std::max<std::size_t>(grid_points, 2));
  candidates.insert(candidates.end(), grid.begin(), grid.end());

  for (double x0 : candidates) {
    for (Side side : {Side::left, Side::right, Side::at}) {
      auto w = limit_witness(pair, x0, side);
      if (!w) continue;
      if (!report.ea) {
        report.ea = true;
        report.ea_witness = w;
      }
      if (w->u) {
        report.clr = true;
        report.clr_witness = w;
        return report;
      }
    }
  }
  return report;
}

PairPropertyReport analyze_pair(const HybridPair& pair, const PairScanOptions& options) {
  PairPropertyReport report;
  report.kind = pair.kind();
  report.coincidence = coincidence_points(pair, options.resolution);
  report.common_fixed = common_fixed_points(pair, options.resolution);
  if (pair.kind() == SpaceKind::finite) report.commuting = check_commuting(pair);
  report.idempotency = check_idempotency(pair, options.resolution);
  report.ea_clr = detect_ea_clr(pair, options.limit_grid_points);
  return report;
}

}  // namespace fplab
