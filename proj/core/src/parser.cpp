// SPDX-License-Identifier: Apache-2.0
#include "parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "fplab/errors.hpp"

namespace fplab::detail {

namespace {

std::shared_ptr<const Expr::Node> make_node(Expr::Op op, std::vector<std::shared_ptr<const Expr::Node>> args) {
  auto node = std::make_shared<Expr::Node>();
  node->op = op;
  node->args = std::move(args);
  return node;
}

struct FunctionName {
  std::string_view name;
  Expr::Op op;
};

constexpr FunctionName kFunctions[] = {
    {"exp", Expr::Op::exp},
    {"ln", Expr::Op::ln},
    {"sqrt", Expr::Op::sqrt},
    {"abs", Expr::Op::abs},
};

}  // namespace

Parser::Parser(std::string_view text, std::vector<std::string> variables)
    : text_(text), variables_(std::make_shared<const std::vector<std::string>>(std::move(variables))) {}

void Parser::fail(const std::string& message) const { throw ParseError(message, pos_); }

void Parser::skip_space() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Parser::at(char c) {
  skip_space();
  return pos_ < text_.size() && text_[pos_] == c;
}

bool Parser::accept(char c) {
  if (!at(c)) return false;
  ++pos_;
  return true;
}

void Parser::expect(char c) {
  if (!accept(c)) {
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but reached end of input");
    fail(std::string("expected '") + c + "' but found '" + text_[pos_] + "'");
  }
}

bool Parser::accept_word(std::string_view word) {
  skip_space();
  if (text_.substr(pos_, word.size()) != word) return false;
  std::size_t end = pos_ + word.size();
  if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
    return false;
  pos_ = end;
  return true;
}

void Parser::expect_word(std::string_view word) {
  if (!accept_word(word)) fail("expected '" + std::string(word) + "'");
}

void Parser::expect_end() {
  skip_space();
  if (pos_ != text_.size()) fail(std::string("unexpected trailing input '") + text_[pos_] + "'");
}

double Parser::unsigned_number() {
  skip_space();
  std::size_t start = pos_;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  if (pos_ < text_.size() && text_[pos_] == '.') {
    ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) {
    pos_ = start;
    fail("expected a number");
  }
  if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
    std::size_t mark = pos_;
    ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    } else {
      pos_ = mark;
    }
  }
  double value = 0.0;
  const char* first = text_.data() + start;
  const char* last = text_.data() + pos_;
  // from_chars rejects a leading '.', so accept ".5" by parsing "0" + text.
  if (*first == '.') {
    std::string padded = "0" + std::string(first, last);
    auto [ptr, ec] = std::from_chars(padded.data(), padded.data() + padded.size(), value);
    if (ec != std::errc{} || ptr != padded.data() + padded.size()) fail("malformed number");
  } else {
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) fail("malformed number");
  }
  if (!std::isfinite(value)) fail("number out of range");
  return value;
}

double Parser::number() {
  bool negative = false;
  if (accept('-')) {
    negative = true;
  } else {
    accept('+');
  }
  double value = unsigned_number();
  if (accept('/')) {
    double denominator = unsigned_number();
    if (denominator == 0.0) fail("zero denominator in fraction");
    value /= denominator;
  }
  return negative ? -value : value;
}

std::string Parser::identifier() {
  skip_space();
  std::size_t start = pos_;
  while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
    ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

Parser::NodePtr Parser::sum() {
  NodePtr left = product();
  for (;;) {
    if (accept('+')) {
      left = make_node(Expr::Op::add, {left, product()});
    } else if (accept('-')) {
      left = make_node(Expr::Op::subtract, {left, product()});
    } else {
      return left;
    }
  }
}

Parser::NodePtr Parser::product() {
  NodePtr left = unary();
  for (;;) {
    if (accept('*')) {
      left = make_node(Expr::Op::multiply, {left, unary()});
    } else if (accept('/')) {
      left = make_node(Expr::Op::divide, {left, unary()});
    } else {
      return left;
    }
  }
}

Parser::NodePtr Parser::unary() {
  if (accept('-')) return make_node(Expr::Op::negate, {unary()});
  return power();
}

Parser::NodePtr Parser::power() {
  NodePtr base = primary();
  if (accept('^')) return make_node(Expr::Op::power, {base, unary()});
  return base;
}

Parser::NodePtr Parser::primary() {
  skip_space();
  if (pos_ >= text_.size()) fail("unexpected end of expression");
  char c = text_[pos_];
  if (c == '(') {
    ++pos_;
    NodePtr inner = sum();
    expect(')');
    return inner;
  }
  if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
    auto node = std::make_shared<Expr::Node>();
    node->op = Expr::Op::number;
    node->value = unsigned_number();
    return node;
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::size_t start = pos_;
    std::string name = identifier();
    for (const FunctionName& fn : kFunctions) {
      if (name == fn.name) {
        expect('(');
        NodePtr arg = sum();
        expect(')');
        return make_node(fn.op, {arg});
      }
    }
    for (std::size_t i = 0; i < variables_->size(); ++i) {
      if ((*variables_)[i] == name) {
        auto node = std::make_shared<Expr::Node>();
        node->op = Expr::Op::variable;
        node->variable = i;
        return node;
      }
    }
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }
  fail(std::string("unexpected character '") + c + "'");
}

Expr Parser::expression() { return Expr(sum(), variables_); }

SetExpr Parser::set_expression() {
  std::vector<SetExpr::Term> terms;
  do {
    SetExpr::Term term;
    if (accept('[')) {
      term.is_interval = true;
      term.values.push_back(expression());
      expect(',');
      term.values.push_back(expression());
      expect(']');
    } else if (accept('{')) {
      do {
        term.values.push_back(expression());
      } while (accept(','));
      expect('}');
    } else {
      fail("expected a set literal '[a, b]' or '{a, ...}'");
    }
    terms.push_back(std::move(term));
  } while (accept('|'));
  return SetExpr(std::move(terms));
}

RawCondition Parser::condition() {
  RawCondition out;
  skip_space();
  out.position = pos_;
  if (accept('[')) {
    out.lo_closed = true;
  } else if (accept('(')) {
    out.lo_closed = false;
  } else {
    fail("expected '[' or '(' to open a piece condition");
  }
  out.lo = number();
  expect(',');
  out.hi = number();
  if (accept(']')) {
    out.hi_closed = true;
  } else if (accept(')')) {
    out.hi_closed = false;
  } else {
    fail("expected ']' or ')' to close a piece condition");
  }
  return out;
}

}  // namespace fplab::detail
