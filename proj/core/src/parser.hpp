// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fplab/expr.hpp"

namespace fplab::detail {

/// Bounds of a piece condition as written: "[a,b]", "(a,b]", ...
struct RawCondition {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;
  std::size_t position = 0;
};

/// Recursive-descent reader shared by the expression, set-literal and
/// piecewise-map front ends. Whitespace is skipped between tokens.
class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> variables);

  Expr expression();
  SetExpr set_expression();
  RawCondition condition();
  double number();

  bool accept(char c);
  void expect(char c);
  bool accept_word(std::string_view word);
  void expect_word(std::string_view word);
  void expect_end();
  [[nodiscard]] bool at(char c);
  [[nodiscard]] std::size_t position() const noexcept { return pos_; }

 private:
  using NodePtr = std::shared_ptr<const Expr::Node>;

  NodePtr sum();
  NodePtr product();
  NodePtr unary();
  NodePtr power();
  NodePtr primary();
  double unsigned_number();
  std::string identifier();
  void skip_space();
  [[noreturn]] void fail(const std::string& message) const;

  std::string_view text_;
  std::size_t pos_ = 0;
  std::shared_ptr<const std::vector<std::string>> variables_;
};

}  // namespace fplab::detail
