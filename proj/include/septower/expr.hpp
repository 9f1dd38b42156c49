#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "septower/errors.hpp"
#include "septower/poly.hpp"

namespace septower {

/// Positional parse failure; column is 1-based within the parsed text.
class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t column)
      : InputError(what + " at column " + std::to_string(column)), message_(what), column_(column) {}
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t column_;
};

/// Parsed polynomial text: integers, identifiers, + - * / ^ and parentheses.
/// `x` is the polynomial variable, `t` the base variable; other identifiers
/// are resolved against a symbol table at evaluation time.
struct ExprNode {
  enum class Kind { integer, symbol, add, sub, mul, div, pow, neg } kind;
  std::int64_t value = 0;  // integer literal or exponent
  std::string name;
  std::size_t column = 0;
  std::unique_ptr<ExprNode> lhs;
  std::unique_ptr<ExprNode> rhs;
};

[[nodiscard]] std::unique_ptr<ExprNode> parse_expression(std::string_view text);

using Symbols = std::map<std::string, Elem, std::less<>>;

/// Generator names of every stage of f, bound to the lifted generators.
[[nodiscard]] Symbols generator_symbols(const Field& f);

/// Evaluates text as a polynomial in x over f. Division is allowed by nonzero
/// constants only. Symbols default to the generator names of f.
[[nodiscard]] Poly parse_poly(const Field& f, std::string_view text);
[[nodiscard]] Poly parse_poly(const Field& f, std::string_view text, const Symbols& symbols);
/// Evaluates text as an element of f; x is not allowed.
[[nodiscard]] Elem parse_elem(const Field& f, std::string_view text);
[[nodiscard]] Elem parse_elem(const Field& f, std::string_view text, const Symbols& symbols);

}  // namespace septower
