#include "septower/expr.hpp"

#include <cctype>
#include <limits>

namespace septower {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::unique_ptr<ExprNode> parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::unique_ptr<ExprNode> node(ExprNode::Kind k, std::size_t col) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    n->column = col;
    return n;
  }

  static std::unique_ptr<ExprNode> binary(ExprNode::Kind k, std::size_t col, std::unique_ptr<ExprNode> l,
                                          std::unique_ptr<ExprNode> r) {
    auto n = node(k, col);
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  std::unique_ptr<ExprNode> expr() {
    auto lhs = term();
    for (;;) {
      skip();
      const std::size_t col = pos_ + 1;
      if (accept('+')) {
        lhs = binary(ExprNode::Kind::add, col, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(ExprNode::Kind::sub, col, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<ExprNode> term() {
    auto lhs = unary();
    for (;;) {
      skip();
      const std::size_t col = pos_ + 1;
      if (accept('*')) {
        lhs = binary(ExprNode::Kind::mul, col, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = binary(ExprNode::Kind::div, col, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<ExprNode> unary() {
    skip();
    const std::size_t col = pos_ + 1;
    if (accept('-')) {
      auto n = node(ExprNode::Kind::neg, col);
      n->lhs = unary();
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  std::unique_ptr<ExprNode> power() {
    auto base = primary();
    skip();
    const std::size_t col = pos_ + 1;
    if (!accept('^')) return base;
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected a non-negative integer exponent");
    }
    auto n = node(ExprNode::Kind::pow, col);
    n->value = integer();
    n->lhs = std::move(base);
    return n;
  }

  std::int64_t integer() {
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer literal too large");
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  std::unique_ptr<ExprNode> primary() {
    skip();
    const std::size_t col = pos_ + 1;
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = node(ExprNode::Kind::integer, col);
      n->value = integer();
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto n = node(ExprNode::Kind::symbol, col);
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        n->name += s_[pos_++];
      }
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Poly evaluate(const ExprNode& n, const Field& f, const Symbols& symbols, bool allow_x) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::integer:
      return Poly::constant(Elem::integer(f, n.value));
    case K::symbol: {
      if (n.name == "x") {
        if (!allow_x) throw SyntaxError("the variable x is not allowed here", n.column);
        return Poly::x(f);
      }
      if (auto it = symbols.find(n.name); it != symbols.end()) return Poly::constant(it->second.lift(f));
      if (n.name == "t") {
        if (f.base().kind() != FieldKind::rational_function) {
          throw SyntaxError("t is only available over F_p(t)", n.column);
        }
        return Poly::constant(Elem::t(f));
      }
      throw SyntaxError("unknown identifier '" + n.name + "'", n.column);
    }
    case K::add:
      return evaluate(*n.lhs, f, symbols, allow_x) + evaluate(*n.rhs, f, symbols, allow_x);
    case K::sub:
      return evaluate(*n.lhs, f, symbols, allow_x) - evaluate(*n.rhs, f, symbols, allow_x);
    case K::mul:
      return evaluate(*n.lhs, f, symbols, allow_x) * evaluate(*n.rhs, f, symbols, allow_x);
    case K::div: {
      const Poly d = evaluate(*n.rhs, f, symbols, allow_x);
      if (d.degree() != 0) throw SyntaxError("division by a non-constant or zero expression", n.column);
      return evaluate(*n.lhs, f, symbols, allow_x) * d.coeffs()[0].inverse();
    }
    case K::pow:
      return evaluate(*n.lhs, f, symbols, allow_x).pow(static_cast<std::uint64_t>(n.value));
    case K::neg:
      return -evaluate(*n.lhs, f, symbols, allow_x);
  }
  throw InternalError("unreachable expression kind");
}

}  // namespace

std::unique_ptr<ExprNode> parse_expression(std::string_view text) { return Parser(text).parse(); }

Symbols generator_symbols(const Field& f) {
  Symbols out;
  for (const auto& s : f.stages()) {
    if (!s.is_base()) out.insert_or_assign(s.generator_name(), Elem::generator(s).lift(f));
  }
  return out;
}

Poly parse_poly(const Field& f, std::string_view text) { return parse_poly(f, text, generator_symbols(f)); }

Poly parse_poly(const Field& f, std::string_view text, const Symbols& symbols) {
  return evaluate(*parse_expression(text), f, symbols, true);
}

Elem parse_elem(const Field& f, std::string_view text) { return parse_elem(f, text, generator_symbols(f)); }

Elem parse_elem(const Field& f, std::string_view text, const Symbols& symbols) {
  const Poly p = evaluate(*parse_expression(text), f, symbols, false);
  return p.is_zero() ? Elem::zero(f) : p.coeffs()[0];
}

}  // namespace septower
