#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splitplane/double_number.hpp"

namespace splitplane {

/// A builtin h-holomorphic function together with its real profile f and
/// f'. For every builtin, eval(h) = null_join(f(a), f(b)) on the common
/// domain; the profile pair drives the null-basis oracle and its derivative.
struct Builtin {
  std::string name;
  int param_count = 0;  // extra constant arguments, e.g. the order of root(h, n)
  DoubleNumber (*eval)(const DoubleNumber& h, std::span<const double> params) = nullptr;
  double (*profile)(double a, std::span<const double> params) = nullptr;
  double (*profile_derivative)(double a, std::span<const double> params) = nullptr;
};

/// nullptr when the name is not registered. "ln" is an alias of "log".
const Builtin* find_builtin(std::string_view name);

/// Every registered builtin (aliases excluded), in a fixed order.
std::span<const Builtin> builtins();

/// Immutable expression tree over one variable h. Copies share nodes.
class FunctionExpr {
 public:
  enum class Kind { Variable, Constant, Call, Sum, Difference, Product, Quotient, Negate, Power, Conjugate };

  /// The identity map h -> h.
  FunctionExpr();

  static FunctionExpr variable();
  static FunctionExpr constant(const DoubleNumber& c);
  /// Throws UnknownFunction for unregistered names, Domain for a wrong parameter count.
  static FunctionExpr call(std::string_view name, const FunctionExpr& arg, std::vector<double> params = {});
  static FunctionExpr conjugate(const FunctionExpr& arg);
  /// Integral exponents evaluate through pow_int, others through pow_real.
  static FunctionExpr power(const FunctionExpr& base, double exponent);
  /// kind is one of Sum, Difference, Product, Quotient.
  static FunctionExpr binary(Kind kind, const FunctionExpr& lhs, const FunctionExpr& rhs);
  static FunctionExpr negate(const FunctionExpr& arg);

  Kind kind() const;
  const DoubleNumber& value() const;          // Constant
  const Builtin& builtin() const;             // Call
  std::span<const double> params() const;     // Call
  double exponent() const;                    // Power
  const FunctionExpr& lhs() const;            // binary nodes; the operand of unary nodes
  const FunctionExpr& rhs() const;            // binary nodes

  DoubleNumber evaluate(const DoubleNumber& h) const;
  DoubleNumber operator()(const DoubleNumber& h) const { return evaluate(h); }

  /// Oracle evaluation: every builtin is applied to the null coordinates
  /// through its real profile. Throws Domain for conj, which mixes them.
  DoubleNumber evaluate_componentwise(const DoubleNumber& h) const;

  /// dF/dh by forward-mode differentiation in the null basis:
  /// null_join(f'(a), f'(b)) composed through the chain rule.
  DoubleNumber null_derivative(const DoubleNumber& h) const;

  /// outer(inner(h)).
  friend FunctionExpr compose(const FunctionExpr& outer, const FunctionExpr& inner);

  /// Text that parse_expression reads back to an identical tree.
  std::string to_string() const;

  friend bool operator==(const FunctionExpr& a, const FunctionExpr& b);

  struct Node;

 private:
  explicit FunctionExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline FunctionExpr operator+(const FunctionExpr& a, const FunctionExpr& b) {
  return FunctionExpr::binary(FunctionExpr::Kind::Sum, a, b);
}
inline FunctionExpr operator-(const FunctionExpr& a, const FunctionExpr& b) {
  return FunctionExpr::binary(FunctionExpr::Kind::Difference, a, b);
}
inline FunctionExpr operator*(const FunctionExpr& a, const FunctionExpr& b) {
  return FunctionExpr::binary(FunctionExpr::Kind::Product, a, b);
}
inline FunctionExpr operator/(const FunctionExpr& a, const FunctionExpr& b) {
  return FunctionExpr::binary(FunctionExpr::Kind::Quotient, a, b);
}
inline FunctionExpr operator-(const FunctionExpr& a) { return FunctionExpr::negate(a); }

/// Grammar: sums of products of unary-signed powers; `^` is right
/// associative and binds tighter than unary minus; exponents must be real
/// constants. Atoms: numbers (with optional j suffix), h, j, pi, e,
/// parenthesised expressions and calls name(expr[, constant...]).
/// Throws SyntaxError (with byte offset) or Error(UnknownFunction).
FunctionExpr parse_expression(std::string_view src);

}  // namespace splitplane
