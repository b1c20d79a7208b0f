// SPDX-License-Identifier: Apache-2.0
#include "fplab/expr.hpp"

#include <cmath>

#include "fplab/errors.hpp"
#include "fplab/format.hpp"
#include "parser.hpp"

namespace fplab {

namespace {

double eval_node(const Expr::Node& node, std::span<const double> values) {
  using Op = Expr::Op;
  switch (node.op) {
    case Op::number:
      return node.value;
    case Op::variable:
      return values[node.variable];
    case Op::negate:
      return -eval_node(*node.args[0], values);
    case Op::add:
      return eval_node(*node.args[0], values) + eval_node(*node.args[1], values);
    case Op::subtract:
      return eval_node(*node.args[0], values) - eval_node(*node.args[1], values);
    case Op::multiply:
      return eval_node(*node.args[0], values) * eval_node(*node.args[1], values);
    case Op::divide:
      return eval_node(*node.args[0], values) / eval_node(*node.args[1], values);
    case Op::power:
      return std::pow(eval_node(*node.args[0], values), eval_node(*node.args[1], values));
    case Op::exp:
      return std::exp(eval_node(*node.args[0], values));
    case Op::ln:
      return std::log(eval_node(*node.args[0], values));
    case Op::sqrt:
      return std::sqrt(eval_node(*node.args[0], values));
    case Op::abs:
      return std::fabs(eval_node(*node.args[0], values));
  }
  return std::nan("");
}

// Binding strength used for printing: a child is parenthesised when its
// precedence is below what the parent slot requires.
int precedence(Expr::Op op) {
  using Op = Expr::Op;
  switch (op) {
    case Op::add:
    case Op::subtract:
      return 1;
    case Op::multiply:
    case Op::divide:
      return 2;
    case Op::negate:
      return 3;
    case Op::power:
      return 4;
    default:
      return 5;
  }
}

std::string print_node(const Expr::Node& node, std::span<const std::string> names);

std::string print_child(const Expr::Node& child, int required, std::span<const std::string> names) {
  std::string text = print_node(child, names);
  if (precedence(child.op) < required) return "(" + text + ")";
  return text;
}

std::string print_node(const Expr::Node& node, std::span<const std::string> names) {
  using Op = Expr::Op;
  switch (node.op) {
    case Op::number:
      return format_real(node.value);
    case Op::variable:
      return names[node.variable];
    case Op::negate:
      return "-" + print_child(*node.args[0], 3, names);
    case Op::add:
      return print_child(*node.args[0], 1, names) + " + " + print_child(*node.args[1], 2, names);
    case Op::subtract:
      return print_child(*node.args[0], 1, names) + " - " + print_child(*node.args[1], 2, names);
    case Op::multiply:
      return print_child(*node.args[0], 2, names) + " * " + print_child(*node.args[1], 3, names);
    case Op::divide:
      return print_child(*node.args[0], 2, names) + " / " + print_child(*node.args[1], 3, names);
    case Op::power:
      return print_child(*node.args[0], 5, names) + "^" + print_child(*node.args[1], 3, names);
    case Op::exp:
      return "exp(" + print_node(*node.args[0], names) + ")";
    case Op::ln:
      return "ln(" + print_node(*node.args[0], names) + ")";
    case Op::sqrt:
      return "sqrt(" + print_node(*node.args[0], names) + ")";
    case Op::abs:
      return "abs(" + print_node(*node.args[0], names) + ")";
  }
  return "?";
}

bool same_tree(const Expr::Node& a, const Expr::Node& b) {
  if (a.op != b.op || a.args.size() != b.args.size()) return false;
  if (a.op == Expr::Op::number && a.value != b.value) return false;
  if (a.op == Expr::Op::variable && a.variable != b.variable) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_tree(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

}  // namespace

Expr::Expr(std::shared_ptr<const Node> root, std::shared_ptr<const std::vector<std::string>> variables)
    : root_(std::move(root)), variables_(std::move(variables)) {}

double Expr::eval(std::span<const double> values) const {
  if (values.size() != variables_->size())
    throw EvaluationError("expression expects " + std::to_string(variables_->size()) + " argument(s), got " +
                          std::to_string(values.size()));
  return eval_node(*root_, values);
}

std::string Expr::to_string() const { return print_node(*root_, *variables_); }

bool operator==(const Expr& a, const Expr& b) {
  return *a.variables_ == *b.variables_ && same_tree(*a.root_, *b.root_);
}

SetExpr::SetExpr(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw EvaluationError("set expression without terms");
  for (const Term& term : terms_) {
    if (term.values.empty() || (term.is_interval && term.values.size() != 2))
      throw EvaluationError("malformed set expression term");
  }
}

ClosedSet SetExpr::eval(std::span<const double> values) const {
  std::vector<Interval> pieces;
  for (const Term& term : terms_) {
    if (term.is_interval) {
      double lo = term.values[0].eval(values);
      double hi = term.values[1].eval(values);
      if (!std::isfinite(lo) || !std::isfinite(hi))
        throw EvaluationError("interval endpoint is not finite in " + to_string());
      if (lo > hi)
        throw EvaluationError("interval [" + format_real(lo) + ", " + format_real(hi) + "] has lo > hi in " +
                              to_string());
      pieces.push_back({lo, hi});
    } else {
      for (const Expr& element : term.values) {
        double v = element.eval(values);
        if (!std::isfinite(v)) throw EvaluationError("set element is not finite in " + to_string());
        pieces.push_back({v, v});
      }
    }
  }
  return ClosedSet(std::move(pieces));
}

std::string SetExpr::to_string() const {
  std::string out;
  for (const Term& term : terms_) {
    if (!out.empty()) out += " | ";
    out += term.is_interval ? "[" : "{";
    for (std::size_t i = 0; i < term.values.size(); ++i) {
      if (i > 0) out += ", ";
      out += term.values[i].to_string();
    }
    out += term.is_interval ? "]" : "}";
  }
  return out;
}

bool operator==(const SetExpr& a, const SetExpr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].is_interval != b.terms_[i].is_interval || a.terms_[i].values != b.terms_[i].values)
      return false;
  }
  return true;
}

Expr parse_expr(std::string_view text, std::vector<std::string> variables) {
  detail::Parser parser(text, std::move(variables));
  Expr out = parser.expression();
  parser.expect_end();
  return out;
}

SetExpr parse_set_expr(std::string_view text, std::vector<std::string> variables) {
  detail::Parser parser(text, std::move(variables));
  SetExpr out = parser.set_expression();
  parser.expect_end();
  return out;
}

Expr parse_expr2(std::string_view text, std::string first, std::string second) {
  return parse_expr(text, {std::move(first), std::move(second)});
}

Expr parse_expr3(std::string_view text, std::string first, std::string second, std::string third) {
  return parse_expr(text, {std::move(first), std::move(second), std::move(third)});
}

}  // namespace fplab
