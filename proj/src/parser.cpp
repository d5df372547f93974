#include <cctype>
#include <charconv>
#include <numbers>

#include "splitplane/expr.hpp"

namespace splitplane {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  FunctionExpr parse() {
    FunctionExpr e = expression();
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, what + " in expression");
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  FunctionExpr expression() {
    FunctionExpr e = term();
    for (;;) {
      if (accept('+')) {
        e = e + term();
      } else if (accept('-')) {
        e = e - term();
      } else {
        return e;
      }
    }
  }

  FunctionExpr term() {
    FunctionExpr e = unary();
    for (;;) {
      if (accept('*')) {
        e = e * unary();
      } else if (accept('/')) {
        e = e / unary();
      } else {
        return e;
      }
    }
  }

  FunctionExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  FunctionExpr power() {
    FunctionExpr base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    const FunctionExpr ex = unary();
    return FunctionExpr::power(base, real_constant(ex, at, "exponent"));
  }

  // Constant subexpressions (exponents, call parameters) are folded here.
  double real_constant(const FunctionExpr& e, std::size_t at, const char* what) const {
    if (contains_variable(e)) throw SyntaxError(at, std::string(what) + " must be a real constant");
    const DoubleNumber v = e.evaluate(DoubleNumber(0.0));
    if (v.x() != 0.0) throw SyntaxError(at, std::string(what) + " must be real");
    return v.t();
  }

  static bool contains_variable(const FunctionExpr& e) {
    using K = FunctionExpr::Kind;
    switch (e.kind()) {
      case K::Variable: return true;
      case K::Constant: return false;
      case K::Sum:
      case K::Difference:
      case K::Product:
      case K::Quotient: return contains_variable(e.lhs()) || contains_variable(e.rhs());
      default: return contains_variable(e.lhs());
    }
  }

  FunctionExpr primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected an operand");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      FunctionExpr e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("expected an operand");
  }

  FunctionExpr number() {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), v);
    if (ec != std::errc()) fail("malformed number");
    pos_ = static_cast<std::size_t>(ptr - src_.data());
    if (pos_ < src_.size() && src_[pos_] == 'j') {
      ++pos_;
      return FunctionExpr::constant(DoubleNumber(0.0, v));
    }
    return FunctionExpr::constant(DoubleNumber(v));
  }

  FunctionExpr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    skip_ws();
    const bool is_call = pos_ < src_.size() && src_[pos_] == '(';
    if (!is_call) {
      if (name == "h") return FunctionExpr::variable();
      if (name == "j") return FunctionExpr::constant(DoubleNumber(0.0, 1.0));
      if (name == "pi") return FunctionExpr::constant(DoubleNumber(std::numbers::pi));
      if (name == "e") return FunctionExpr::constant(DoubleNumber(std::numbers::e));
      throw Error(ErrorKind::UnknownFunction,
                  "unknown name '" + std::string(name) + "' at offset " + std::to_string(start));
    }
    ++pos_;
    const bool conj = name == "conj";
    if (!conj && find_builtin(name) == nullptr) {
      throw Error(ErrorKind::UnknownFunction,
                  "unknown function '" + std::string(name) + "' at offset " + std::to_string(start));
    }
    FunctionExpr arg = expression();
    std::vector<double> params;
    while (accept(',')) {
      skip_ws();
      const std::size_t at = pos_;
      params.push_back(real_constant(expression(), at, "function parameter"));
    }
    expect(')');
    if (conj) {
      if (!params.empty()) throw SyntaxError(start, "conj takes one argument");
      return FunctionExpr::conjugate(arg);
    }
    try {
      return FunctionExpr::call(name, arg, std::move(params));
    } catch (const Error& e) {
      throw SyntaxError(start, e.what());
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

FunctionExpr parse_expression(std::string_view src) { return Parser(src).parse(); }

}  // namespace splitplane
