// SPDX-License-Identifier: Apache-2.0
#include "fplab/closed_set.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "fplab/errors.hpp"
#include "fplab/format.hpp"

namespace fplab {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) throw std::runtime_error("format_real: to_chars failed");
  return std::string(buffer, end);
}

std::string format_significant(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

ClosedSet::ClosedSet(std::vector<Interval> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("ClosedSet: empty set");
  for (const Interval& piece : pieces_) {
    if (!std::isfinite(piece.lo) || !std::isfinite(piece.hi))
      throw std::invalid_argument("ClosedSet: non-finite coordinate");
    if (piece.lo > piece.hi)
      throw std::invalid_argument("ClosedSet: interval with lo > hi");
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  // Zero gap threshold: touching pieces merge, any positive gap survives.
  std::vector<Interval> merged;
  merged.reserve(pieces_.size());
  for (const Interval& piece : pieces_) {
    if (!merged.empty() && piece.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, piece.hi);
    } else {
      merged.push_back(piece);
    }
  }
  pieces_ = std::move(merged);
}

ClosedSet ClosedSet::point(double x) { return ClosedSet({Interval{x, x}}); }

ClosedSet ClosedSet::interval(double lo, double hi) { return ClosedSet({Interval{lo, hi}}); }

ClosedSet ClosedSet::finite(std::span<const double> points) {
  std::vector<Interval> pieces;
  pieces.reserve(points.size());
  for (double x : points) pieces.push_back({x, x});
  return ClosedSet(std::move(pieces));
}

namespace {

// Index of the first piece whose hi is >= x (pieces.size() if none).
std::size_t first_piece_not_below(std::span<const Interval> pieces, double x) {
  auto it = std::lower_bound(pieces.begin(), pieces.end(), x,
                             [](const Interval& piece, double value) { return piece.hi < value; });
  return static_cast<std::size_t>(it - pieces.begin());
}

}  // namespace

bool ClosedSet::contains(double x) const noexcept {
  std::size_t i = first_piece_not_below(pieces_, x);
  return i < pieces_.size() && pieces_[i].lo <= x;
}

bool ClosedSet::is_finite() const noexcept {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Interval& p) { return p.degenerate(); });
}

bool ClosedSet::is_singleton() const noexcept {
  return pieces_.size() == 1 && pieces_.front().degenerate();
}

bool ClosedSet::subset_of(const ClosedSet& other, double tol) const {
  for (const Interval& piece : pieces_) {
    // A piece is covered when both ends are near `other` and no gap of
    // `other` wider than 2*tol opens strictly inside it.
    if (point_set_distance(piece.lo, other) > tol || point_set_distance(piece.hi, other) > tol)
      return false;
    auto others = other.pieces();
    for (std::size_t i = 0; i + 1 < others.size(); ++i) {
      double gap_lo = others[i].hi;
      double gap_hi = others[i + 1].lo;
      if (gap_hi <= piece.lo || gap_lo >= piece.hi) continue;
      double mid = std::clamp(0.5 * (gap_lo + gap_hi), piece.lo, piece.hi);
      if (point_set_distance(mid, other) > tol) return false;
    }
  }
  return true;
}

ClosedSet ClosedSet::unite(const ClosedSet& other) const {
  std::vector<Interval> pieces(pieces_.begin(), pieces_.end());
  pieces.insert(pieces.end(), other.pieces_.begin(), other.pieces_.end());
  return ClosedSet(std::move(pieces));
}

std::vector<double> ClosedSet::endpoints() const {
  std::vector<double> out;
  out.reserve(2 * pieces_.size());
  for (const Interval& piece : pieces_) {
    out.push_back(piece.lo);
    if (!piece.degenerate()) out.push_back(piece.hi);
  }
  return out;
}

std::string ClosedSet::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < pieces_.size()) {
    if (!out.empty()) out += " | ";
    if (pieces_[i].degenerate()) {
      out += '{';
      bool first = true;
      while (i < pieces_.size() && pieces_[i].degenerate()) {
        if (!first) out += ", ";
        out += format_real(pieces_[i].lo);
        first = false;
        ++i;
      }
      out += '}';
    } else {
      out += '[' + format_real(pieces_[i].lo) + ", " + format_real(pieces_[i].hi) + ']';
      ++i;
    }
  }
  return out;
}

double point_set_distance(double x, const ClosedSet& set) {
  auto pieces = set.pieces();
  std::size_t i = first_piece_not_below(pieces, x);
  double best = std::numeric_limits<double>::infinity();
  if (i < pieces.size()) {
    if (pieces[i].lo <= x) return 0.0;
    best = pieces[i].lo - x;
  }
  if (i > 0) best = std::min(best, x - pieces[i - 1].hi);
  return best;
}

double nearest_point(double x, const ClosedSet& set) {
  auto pieces = set.pieces();
  std::size_t i = first_piece_not_below(pieces, x);
  if (i < pieces.size() && pieces[i].lo <= x) return x;
  if (i == pieces.size()) return pieces.back().hi;
  if (i == 0) return pieces.front().lo;
  double below = pieces[i - 1].hi;
  double above = pieces[i].lo;
  return (x - below <= above - x) ? below : above;
}

double directed_hausdorff(const ClosedSet& a, const ClosedSet& b) {
  // d(., B) is piecewise linear with local maxima only at midpoints of the
  // gaps of B, so its sup over A is attained at an endpoint of A or at a gap
  // midpoint lying in A.
  double best = 0.0;
  for (const Interval& piece : a.pieces()) {
    best = std::max(best, point_set_distance(piece.lo, b));
    best = std::max(best, point_set_distance(piece.hi, b));
  }
  auto others = b.pieces();
  for (std::size_t i = 0; i + 1 < others.size(); ++i) {
    double mid = 0.5 * (others[i].hi + others[i + 1].lo);
    if (a.contains(mid)) best = std::max(best, point_set_distance(mid, b));
  }
  return best;
}

double hausdorff(const ClosedSet& a, const ClosedSet& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double hausdorff_pow(const ClosedSet& a, const ClosedSet& b, double p) {
  if (!(p >= 1.0)) throw ParameterError("hausdorff_pow: exponent p must be >= 1");
  double h = hausdorff(a, b);
  return p == 1.0 ? h : std::pow(h, p);
}

}  // namespace fplab
