// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fplab/closed_set.hpp"
#include "fplab/expr.hpp"

namespace fplab {

/// Piece guard such as "[0,1)" or "(2,3]". lo == hi requires both ends closed.
struct Condition {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  [[nodiscard]] bool contains(double x) const noexcept {
    return (lo_closed ? lo <= x : lo < x) && (hi_closed ? x <= hi : x < hi);
  }
  [[nodiscard]] bool degenerate() const noexcept { return lo == hi; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// Values of a piecewise map next to and at x0. A side is absent when no
/// piece reaches x0 from that side (domain boundary or isolated point).
template <class Value>
struct OneSidedLimits {
  std::optional<Value> left;
  Value at;
  std::optional<Value> right;
};

/// Map on a closed subset of the real line defined piece by piece.
///
/// `Expression` is Expr for single-valued maps x -> R and SetExpr for
/// set-valued maps x -> CB(R); both are written in the variable `x`.
/// Construction checks that the conditions are nonempty, pairwise disjoint
/// and that their union is closed (each shared boundary is owned by exactly
/// one side), and that every piece evaluates cleanly on its closure.
template <class Expression>
class Piecewise {
 public:
  using value_type = decltype(std::declval<const Expression&>().eval(0.0));

  struct Piece {
    Condition condition;
    Expression expression;
  };

  explicit Piecewise(std::vector<Piece> pieces);

  /// Value at x; throws DomainError when x is outside the domain.
  [[nodiscard]] value_type operator()(double x) const;

  /// Index of the piece whose condition holds at x, if any.
  [[nodiscard]] std::optional<std::size_t> piece_index(double x) const noexcept;

  /// Throws DomainError when x0 is outside the domain.
  [[nodiscard]] OneSidedLimits<value_type> one_sided_limits(double x0) const;

  [[nodiscard]] const ClosedSet& domain() const noexcept { return domain_; }
  [[nodiscard]] std::span<const Piece> pieces() const noexcept { return pieces_; }

  /// All condition endpoints, sorted and unique.
  [[nodiscard]] std::vector<double> breakpoints() const;

  /// True when every condition is a single point (a finite space).
  [[nodiscard]] bool is_finite_space() const noexcept;

  /// "piecewise{ [0,2]: 3 - x ; (2,3]: 3 }"; parses back to an equal map.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Piecewise& a, const Piecewise& b) {
    if (a.pieces_.size() != b.pieces_.size()) return false;
    for (std::size_t i = 0; i < a.pieces_.size(); ++i) {
      if (!(a.pieces_[i].condition == b.pieces_[i].condition) ||
          !(a.pieces_[i].expression == b.pieces_[i].expression))
        return false;
    }
    return true;
  }

 private:
  std::vector<Piece> pieces_;
  ClosedSet domain_;
};

using PiecewiseMap = Piecewise<Expr>;
using PiecewiseSetMap = Piecewise<SetExpr>;

extern template class Piecewise<Expr>;
extern template class Piecewise<SetExpr>;

/// f(x) = x on every piece of `domain`.
[[nodiscard]] PiecewiseMap identity_map(const ClosedSet& domain);

/// "piecewise{ interval: expr ; ... }" with scalar pieces.
[[nodiscard]] PiecewiseMap parse_single(std::string_view text);

/// "piecewise{ interval: setlit ; ... }" with set-literal pieces.
[[nodiscard]] PiecewiseSetMap parse_multi(std::string_view text);

}  // namespace fplab
