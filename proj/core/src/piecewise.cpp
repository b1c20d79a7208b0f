// SPDX-License-Identifier: Apache-2.0
#include "fplab/piecewise.hpp"

#include <algorithm>
#include <cmath>

#include "fplab/errors.hpp"
#include "fplab/format.hpp"
#include "parser.hpp"

namespace fplab {

std::string Condition::to_string() const {
  return std::string(lo_closed ? "[" : "(") + format_real(lo) + "," + format_real(hi) + (hi_closed ? "]" : ")");
}

namespace {

constexpr int kValidationPoints = 33;

void check_value(double value, const Condition& condition, double x) {
  if (!std::isfinite(value))
    throw EvaluationError("piece " + condition.to_string() + " is not finite at x = " + format_real(x));
}

void check_value(const ClosedSet&, const Condition&, double) {}

ClosedSet build_domain(std::span<const Condition> conditions) {
  std::vector<Interval> closures;
  closures.reserve(conditions.size());
  for (const Condition& c : conditions) closures.push_back({c.lo, c.hi});
  return ClosedSet(std::move(closures));
}

template <class Piece>
std::vector<Piece> validated(std::vector<Piece> pieces) {
  if (pieces.empty()) throw MapError(MapError::Kind::empty_condition, "piecewise map without pieces");
  for (const Piece& piece : pieces) {
    const Condition& c = piece.condition;
    if (!std::isfinite(c.lo) || !std::isfinite(c.hi))
      throw MapError(MapError::Kind::empty_condition, "non-finite bound in condition " + c.to_string());
    if (c.lo > c.hi || (c.lo == c.hi && !(c.lo_closed && c.hi_closed)))
      throw MapError(MapError::Kind::empty_condition, "empty condition " + c.to_string());
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    const Condition& x = a.condition;
    const Condition& y = b.condition;
    if (x.lo != y.lo) return x.lo < y.lo;
    if (x.lo_closed != y.lo_closed) return x.lo_closed;
    return x.hi < y.hi;
  });
  const Condition& first = pieces.front().condition;
  const Condition& last = pieces.back().condition;
  if (!first.lo_closed)
    throw MapError(MapError::Kind::coverage_gap,
                   "domain is not closed: left end of " + first.to_string() + " is not covered");
  if (!last.hi_closed)
    throw MapError(MapError::Kind::coverage_gap,
                   "domain is not closed: right end of " + last.to_string() + " is not covered");
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const Condition& a = pieces[i].condition;
    const Condition& b = pieces[i + 1].condition;
    if (b.lo < a.hi || (b.lo == a.hi && a.hi_closed && b.lo_closed))
      throw MapError(MapError::Kind::overlap, "conditions " + a.to_string() + " and " + b.to_string() + " overlap");
    if (b.lo == a.hi && !a.hi_closed && !b.lo_closed)
      throw MapError(MapError::Kind::coverage_gap,
                     "point " + format_real(a.hi) + " between " + a.to_string() + " and " + b.to_string() +
                         " is not covered");
    if (b.lo > a.hi && (!a.hi_closed || !b.lo_closed))
      throw MapError(MapError::Kind::coverage_gap,
                     "domain is not closed between " + a.to_string() + " and " + b.to_string());
  }
  // Pieces are continuous on their closures, so they must evaluate at both
  // endpoints (also open ones, which one-sided limits use) and inside.
  for (const Piece& piece : pieces) {
    const Condition& c = piece.condition;
    for (int k = 0; k <= kValidationPoints; ++k) {
      double x = c.lo + (c.hi - c.lo) * k / kValidationPoints;
      if (k == kValidationPoints) x = c.hi;
      check_value(piece.expression.eval(x), c, x);
      if (c.degenerate()) break;
    }
  }
  return pieces;
}

template <class Piece>
std::vector<Condition> conditions_of(std::span<const Piece> pieces) {
  std::vector<Condition> out;
  out.reserve(pieces.size());
  for (const Piece& p : pieces) out.push_back(p.condition);
  return out;
}

}  // namespace

template <class Expression>
Piecewise<Expression>::Piecewise(std::vector<Piece> pieces)
    : pieces_(validated(std::move(pieces))),
      domain_(build_domain(conditions_of<Piece>(pieces_))) {}

template <class Expression>
std::optional<std::size_t> Piecewise<Expression>::piece_index(double x) const noexcept {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].condition.contains(x)) return i;
  }
  return std::nullopt;
}

template <class Expression>
auto Piecewise<Expression>::operator()(double x) const -> value_type {
  auto index = piece_index(x);
  if (!index) throw DomainError("x = " + format_real(x) + " is outside the domain " + domain_.to_string());
  return pieces_[*index].expression.eval(x);
}

template <class Expression>
auto Piecewise<Expression>::one_sided_limits(double x0) const -> OneSidedLimits<value_type> {
  auto index = piece_index(x0);
  if (!index) throw DomainError("x0 = " + format_real(x0) + " is outside the domain " + domain_.to_string());
  OneSidedLimits<value_type> out{std::nullopt, pieces_[*index].expression.eval(x0), std::nullopt};
  // Limits are read off the neighbouring piece's expression evaluated at x0.
  for (const Piece& piece : pieces_) {
    const Condition& c = piece.condition;
    if (!out.left && c.lo < x0 && x0 <= c.hi) out.left = piece.expression.eval(x0);
    if (!out.right && c.lo <= x0 && x0 < c.hi) out.right = piece.expression.eval(x0);
  }
  return out;
}

template <class Expression>
std::vector<double> Piecewise<Expression>::breakpoints() const {
  std::vector<double> out;
  for (const Piece& piece : pieces_) {
    out.push_back(piece.condition.lo);
    out.push_back(piece.condition.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class Expression>
bool Piecewise<Expression>::is_finite_space() const noexcept {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.condition.degenerate(); });
}

template <class Expression>
std::string Piecewise<Expression>::to_string() const {
  std::string out = "piecewise{ ";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i > 0) out += " ; ";
    out += pieces_[i].condition.to_string() + ": " + pieces_[i].expression.to_string();
  }
  return out + " }";
}

template class Piecewise<Expr>;
template class Piecewise<SetExpr>;

namespace {

template <class Map, class ParseValue>
Map parse_piecewise(std::string_view text, ParseValue parse_value) {
  detail::Parser parser(text, {"x"});
  parser.expect_word("piecewise");
  parser.expect('{');
  std::vector<typename Map::Piece> pieces;
  do {
    detail::RawCondition raw = parser.condition();
    parser.expect(':');
    Condition condition{raw.lo, raw.hi, raw.lo_closed, raw.hi_closed};
    if (raw.lo > raw.hi || (raw.lo == raw.hi && !(raw.lo_closed && raw.hi_closed)))
      throw ParseError("empty condition " + condition.to_string(), raw.position);
    pieces.push_back({condition, parse_value(parser)});
  } while (parser.accept(';'));
  parser.expect('}');
  parser.expect_end();
  return Map(std::move(pieces));
}

}  // namespace

PiecewiseMap identity_map(const ClosedSet& domain) {
  Expr x = parse_expr("x", {"x"});
  std::vector<PiecewiseMap::Piece> pieces;
  for (const Interval& piece : domain.pieces()) pieces.push_back({Condition{piece.lo, piece.hi, true, true}, x});
  return PiecewiseMap(std::move(pieces));
}

PiecewiseMap parse_single(std::string_view text) {
  return parse_piecewise<PiecewiseMap>(text, [](detail::Parser& p) { return p.expression(); });
}

PiecewiseSetMap parse_multi(std::string_view text) {
  return parse_piecewise<PiecewiseSetMap>(text, [](detail::Parser& p) { return p.set_expression(); });
}

}  // namespace fplab
