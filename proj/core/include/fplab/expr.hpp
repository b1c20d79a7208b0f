// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fplab/closed_set.hpp"

namespace fplab {

/// Immutable arithmetic expression over a fixed list of named variables.
///
/// Supports number literals, variables, + - * / ^, unary minus and the
/// functions exp, ln, sqrt, abs. Copies share the underlying tree.
class Expr {
 public:
  enum class Op {
    number,
    variable,
    negate,
    add,
    subtract,
    multiply,
    divide,
    power,
    exp,
    ln,
    sqrt,
    abs,
  };

  struct Node;

  Expr(std::shared_ptr<const Node> root, std::shared_ptr<const std::vector<std::string>> variables);

  /// Values are matched positionally with variables(). Division by zero and
  /// domain errors yield inf/nan; callers validate finiteness.
  [[nodiscard]] double eval(std::span<const double> values) const;
  [[nodiscard]] double eval(double value) const { return eval(std::span<const double>(&value, 1)); }
  [[nodiscard]] double eval(std::initializer_list<double> values) const {
    return eval(std::span<const double>(values.begin(), values.size()));
  }

  [[nodiscard]] std::span<const std::string> variables() const noexcept { return *variables_; }
  [[nodiscard]] const Node& root() const noexcept { return *root_; }

  /// Minimal-parenthesis text; parse_expr(to_string()) rebuilds an equal tree.
  [[nodiscard]] std::string to_string() const;

  /// Structural equality of trees and variable lists.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  std::shared_ptr<const Node> root_;
  std::shared_ptr<const std::vector<std::string>> variables_;
};

struct Expr::Node {
  Op op = Op::number;
  double value = 0.0;        // number
  std::size_t variable = 0;  // variable index
  std::vector<std::shared_ptr<const Node>> args;
};

/// Set-valued expression: a union of interval terms "[lo, hi]" and finite
/// terms "{a, b, ...}" whose entries are Expr over the same variables.
class SetExpr {
 public:
  struct Term {
    bool is_interval = false;
    std::vector<Expr> values;  // {lo, hi} for intervals, elements otherwise
  };

  explicit SetExpr(std::vector<Term> terms);

  /// Throws EvaluationError for non-finite values or an interval with lo > hi.
  [[nodiscard]] ClosedSet eval(std::span<const double> values) const;
  [[nodiscard]] ClosedSet eval(double value) const { return eval(std::span<const double>(&value, 1)); }
  [[nodiscard]] ClosedSet eval(std::initializer_list<double> values) const {
    return eval(std::span<const double>(values.begin(), values.size()));
  }

  [[nodiscard]] std::span<const Term> terms() const noexcept { return terms_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SetExpr& a, const SetExpr& b);

 private:
  std::vector<Term> terms_;
};

/// Parses an arithmetic expression; identifiers must name one of `variables`.
[[nodiscard]] Expr parse_expr(std::string_view text, std::vector<std::string> variables);

/// Parses a set literal ("[a,b]", "{a,b,...}", joined by "|").
[[nodiscard]] SetExpr parse_set_expr(std::string_view text, std::vector<std::string> variables);

/// Two- and three-argument evaluators used by the dynamic-programming and
/// integral-inclusion instances.
[[nodiscard]] Expr parse_expr2(std::string_view text, std::string first, std::string second);
[[nodiscard]] Expr parse_expr3(std::string_view text, std::string first, std::string second,
                               std::string third);

}  // namespace fplab
