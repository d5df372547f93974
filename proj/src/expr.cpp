#include "splitplane/expr.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "splitplane/elementary.hpp"
#include "splitplane/text.hpp"

namespace splitplane {

namespace {

using Params = std::span<const double>;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_integral(double v) { return std::nearbyint(v) == v && std::abs(v) < 2147483648.0; }

DoubleNumber eval_root(const DoubleNumber& h, Params p) { return root(h, static_cast<int>(p[0]), 0); }
double root_profile(double a, Params p) {
  const int n = static_cast<int>(p[0]);
  if (n % 2 == 0) return a > 0 ? std::pow(a, 1.0 / n) : kNaN;
  return std::copysign(std::pow(std::abs(a), 1.0 / n), a);
}
double root_profile_derivative(double a, Params p) {
  const int n = static_cast<int>(p[0]);
  if (a == 0.0) return kNaN;
  return root_profile(a, p) / (n * a);
}

// clang-format off
const std::array<Builtin, 21> kBuiltins = {{
  {"exp", 0, [](const DoubleNumber& h, Params) { return exp(h); },
   [](double a, Params) { return std::exp(a); }, [](double a, Params) { return std::exp(a); }},
  {"log", 0, [](const DoubleNumber& h, Params) { return log(h); },
   [](double a, Params) { return a > 0 ? std::log(a) : kNaN; }, [](double a, Params) { return a > 0 ? 1 / a : kNaN; }},
  {"sin", 0, [](const DoubleNumber& h, Params) { return sin(h); },
   [](double a, Params) { return std::sin(a); }, [](double a, Params) { return std::cos(a); }},
  {"cos", 0, [](const DoubleNumber& h, Params) { return cos(h); },
   [](double a, Params) { return std::cos(a); }, [](double a, Params) { return -std::sin(a); }},
  {"tan", 0, [](const DoubleNumber& h, Params) { return tan(h); },
   [](double a, Params) { return std::tan(a); }, [](double a, Params) { const double c = std::cos(a); return 1 / (c * c); }},
  {"cot", 0, [](const DoubleNumber& h, Params) { return cot(h); },
   [](double a, Params) { return 1 / std::tan(a); }, [](double a, Params) { const double s = std::sin(a); return -1 / (s * s); }},
  {"arcsin", 0, [](const DoubleNumber& h, Params) { return trig_inv(h, TrigInvKind::Arcsin); },
   [](double a, Params) { return std::asin(a); }, [](double a, Params) { return 1 / std::sqrt(1 - a * a); }},
  {"arccos", 0, [](const DoubleNumber& h, Params) { return trig_inv(h, TrigInvKind::Arccos); },
   [](double a, Params) { return std::acos(a); }, [](double a, Params) { return -1 / std::sqrt(1 - a * a); }},
  {"arctan", 0, [](const DoubleNumber& h, Params) { return trig_inv(h, TrigInvKind::Arctan); },
   [](double a, Params) { return std::atan(a); }, [](double a, Params) { return 1 / (1 + a * a); }},
  {"arccot", 0, [](const DoubleNumber& h, Params) { return trig_inv(h, TrigInvKind::Arccot); },
   [](double a, Params) { return std::numbers::pi / 2 - std::atan(a); }, [](double a, Params) { return -1 / (1 + a * a); }},
  {"sinh", 0, [](const DoubleNumber& h, Params) { return sinh(h); },
   [](double a, Params) { return std::sinh(a); }, [](double a, Params) { return std::cosh(a); }},
  {"cosh", 0, [](const DoubleNumber& h, Params) { return cosh(h); },
   [](double a, Params) { return std::cosh(a); }, [](double a, Params) { return std::sinh(a); }},
  {"tanh", 0, [](const DoubleNumber& h, Params) { return tanh(h); },
   [](double a, Params) { return std::tanh(a); }, [](double a, Params) { const double c = std::cosh(a); return 1 / (c * c); }},
  {"coth", 0, [](const DoubleNumber& h, Params) { return coth(h); },
   [](double a, Params) { return 1 / std::tanh(a); }, [](double a, Params) { const double s = std::sinh(a); return -1 / (s * s); }},
  {"arsinh", 0, [](const DoubleNumber& h, Params) { return hyp_inv(h, HypInvKind::Arsinh); },
   [](double a, Params) { return std::asinh(a); }, [](double a, Params) { return 1 / std::sqrt(1 + a * a); }},
  {"arcosh", 0, [](const DoubleNumber& h, Params) { return hyp_inv(h, HypInvKind::Arcosh); },
   [](double a, Params) { return std::acosh(a); }, [](double a, Params) { return 1 / std::sqrt(a * a - 1); }},
  {"artanh", 0, [](const DoubleNumber& h, Params) { return hyp_inv(h, HypInvKind::Artanh); },
   [](double a, Params) { return std::abs(a) < 1 ? std::atanh(a) : kNaN; }, [](double a, Params) { return 1 / (1 - a * a); }},
  {"arcoth", 0, [](const DoubleNumber& h, Params) { return hyp_inv(h, HypInvKind::Arcoth); },
   [](double a, Params) { return std::abs(a) > 1 ? std::atanh(1 / a) : kNaN; }, [](double a, Params) { return 1 / (1 - a * a); }},
  {"sqrt", 0, [](const DoubleNumber& h, Params) { return root(h, 2, 0); },
   [](double a, Params) { return a > 0 ? std::sqrt(a) : kNaN; }, [](double a, Params) { return a > 0 ? 0.5 / std::sqrt(a) : kNaN; }},
  {"root", 1, eval_root, root_profile, root_profile_derivative},
  {"zhukowskiy", 0, [](const DoubleNumber& h, Params) { return zhukowskiy(h); },
   [](double a, Params) { return (a + 1 / a) / 2; }, [](double a, Params) { return (1 - 1 / (a * a)) / 2; }},
}};
// clang-format on

}  // namespace

const Builtin* find_builtin(std::string_view name) {
  if (name == "ln") name = "log";
  for (const Builtin& b : kBuiltins) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

std::span<const Builtin> builtins() { return kBuiltins; }

struct FunctionExpr::Node {
  Kind kind = Kind::Variable;
  DoubleNumber value;
  const Builtin* fn = nullptr;
  std::vector<double> params;
  double exponent = 0.0;
  std::vector<FunctionExpr> kids;
};

namespace {

std::shared_ptr<const FunctionExpr::Node> make(FunctionExpr::Node n) {
  return std::make_shared<const FunctionExpr::Node>(std::move(n));
}

}  // namespace

FunctionExpr::FunctionExpr() : node_(make(Node{})) {}

FunctionExpr FunctionExpr::variable() { return FunctionExpr(); }

FunctionExpr FunctionExpr::constant(const DoubleNumber& c) {
  Node n;
  n.kind = Kind::Constant;
  n.value = c;
  return FunctionExpr(make(std::move(n)));
}

FunctionExpr FunctionExpr::call(std::string_view name, const FunctionExpr& arg, std::vector<double> params) {
  const Builtin* fn = find_builtin(name);
  if (fn == nullptr) throw Error(ErrorKind::UnknownFunction, std::string(name));
  if (static_cast<int>(params.size()) != fn->param_count) {
    throw Error(ErrorKind::Domain, fn->name + " takes " + std::to_string(fn->param_count) + " constant parameter(s)");
  }
  if (fn->name == "root" && (!is_integral(params[0]) || params[0] < 2)) {
    throw Error(ErrorKind::Domain, "root order must be an integer >= 2");
  }
  Node n;
  n.kind = Kind::Call;
  n.fn = fn;
  n.params = std::move(params);
  n.kids = {arg};
  return FunctionExpr(make(std::move(n)));
}

FunctionExpr FunctionExpr::conjugate(const FunctionExpr& arg) {
  Node n;
  n.kind = Kind::Conjugate;
  n.kids = {arg};
  return FunctionExpr(make(std::move(n)));
}

FunctionExpr FunctionExpr::power(const FunctionExpr& base, double exponent) {
  if (!std::isfinite(exponent)) throw Error(ErrorKind::Domain, "non-finite exponent");
  Node n;
  n.kind = Kind::Power;
  n.exponent = exponent;
  n.kids = {base};
  return FunctionExpr(make(std::move(n)));
}

FunctionExpr FunctionExpr::binary(Kind kind, const FunctionExpr& lhs, const FunctionExpr& rhs) {
  if (kind != Kind::Sum && kind != Kind::Difference && kind != Kind::Product && kind != Kind::Quotient) {
    throw Error(ErrorKind::Domain, "not a binary node kind");
  }
  Node n;
  n.kind = kind;
  n.kids = {lhs, rhs};
  return FunctionExpr(make(std::move(n)));
}

FunctionExpr FunctionExpr::negate(const FunctionExpr& arg) {
  Node n;
  n.kind = Kind::Negate;
  n.kids = {arg};
  return FunctionExpr(make(std::move(n)));
}

FunctionExpr::Kind FunctionExpr::kind() const { return node_->kind; }
const DoubleNumber& FunctionExpr::value() const { return node_->value; }
const Builtin& FunctionExpr::builtin() const { return *node_->fn; }
std::span<const double> FunctionExpr::params() const { return node_->params; }
double FunctionExpr::exponent() const { return node_->exponent; }
const FunctionExpr& FunctionExpr::lhs() const { return node_->kids.at(0); }
const FunctionExpr& FunctionExpr::rhs() const { return node_->kids.at(1); }

DoubleNumber FunctionExpr::evaluate(const DoubleNumber& h) const {
  switch (kind()) {
    case Kind::Variable: return h;
    case Kind::Constant: return value();
    case Kind::Call: return builtin().eval(lhs().evaluate(h), params());
    case Kind::Sum: return lhs().evaluate(h) + rhs().evaluate(h);
    case Kind::Difference: return lhs().evaluate(h) - rhs().evaluate(h);
    case Kind::Product: return lhs().evaluate(h) * rhs().evaluate(h);
    case Kind::Quotient: return lhs().evaluate(h) / rhs().evaluate(h);
    case Kind::Negate: return -lhs().evaluate(h);
    case Kind::Conjugate: return conj(lhs().evaluate(h));
    case Kind::Power: {
      const DoubleNumber base = lhs().evaluate(h);
      const double p = exponent();
      if (is_integral(p)) return pow_int(base, static_cast<long>(p));
      return pow_real(base, p);
    }
  }
  return {};
}

namespace {

// Value and d/d(null coordinate) of one null component.
struct Jet {
  double v;
  double d;
};

struct NullJet {
  Jet a;
  Jet b;
};

Jet check(Jet j) {
  if (!std::isfinite(j.v) || !std::isfinite(j.d)) {
    throw Error(ErrorKind::Domain, "null-basis evaluation left the real domain of a profile");
  }
  return j;
}

template <typename Op>
NullJet both(const NullJet& x, Op op) {
  return {check(op(x.a)), check(op(x.b))};
}

template <typename Op>
NullJet both(const NullJet& x, const NullJet& y, Op op) {
  return {check(op(x.a, y.a)), check(op(x.b, y.b))};
}

Jet power_jet(Jet x, double p) {
  if (is_integral(p)) {
    if (x.v == 0.0 && p < 0) throw Error(ErrorKind::ZeroDivisor, "negative power of a zero divisor");
    const double v1 = p == 0 ? 0.0 : std::pow(x.v, p - 1);
    return {std::pow(x.v, p), p * v1 * x.d};
  }
  if (x.v < 0 || (x.v == 0 && p < 0)) throw Error(ErrorKind::Domain, "real power of a negative null coordinate");
  if (x.v == 0) return {0.0, p >= 1 ? 0.0 : std::numeric_limits<double>::quiet_NaN()};
  return {std::pow(x.v, p), p * std::pow(x.v, p - 1) * x.d};
}

NullJet jet(const FunctionExpr& e, const NullPair<double>& at) {
  using K = FunctionExpr::Kind;
  switch (e.kind()) {
    case K::Variable: return {{at.a, 1.0}, {at.b, 1.0}};
    case K::Constant: {
      const NullPair<double> c = null_split(e.value());
      return {{c.a, 0.0}, {c.b, 0.0}};
    }
    case K::Call: {
      const Builtin& fn = e.builtin();
      const auto p = e.params();
      return both(jet(e.lhs(), at), [&](Jet x) {
        return Jet{fn.profile(x.v, p), fn.profile_derivative(x.v, p) * x.d};
      });
    }
    case K::Sum:
      return both(jet(e.lhs(), at), jet(e.rhs(), at), [](Jet x, Jet y) { return Jet{x.v + y.v, x.d + y.d}; });
    case K::Difference:
      return both(jet(e.lhs(), at), jet(e.rhs(), at), [](Jet x, Jet y) { return Jet{x.v - y.v, x.d - y.d}; });
    case K::Product:
      return both(jet(e.lhs(), at), jet(e.rhs(), at),
                  [](Jet x, Jet y) { return Jet{x.v * y.v, x.d * y.v + x.v * y.d}; });
    case K::Quotient:
      return both(jet(e.lhs(), at), jet(e.rhs(), at), [](Jet x, Jet y) {
        if (y.v == 0.0) throw Error(ErrorKind::ZeroDivisor, "division by a zero divisor");
        return Jet{x.v / y.v, (x.d * y.v - x.v * y.d) / (y.v * y.v)};
      });
    case K::Negate: return both(jet(e.lhs(), at), [](Jet x) { return Jet{-x.v, -x.d}; });
    case K::Power: {
      const double p = e.exponent();
      return both(jet(e.lhs(), at), [p](Jet x) { return power_jet(x, p); });
    }
    case K::Conjugate:
      throw Error(ErrorKind::Domain, "conj swaps the null coordinates and has no componentwise form");
  }
  return {};
}

}  // namespace

DoubleNumber FunctionExpr::evaluate_componentwise(const DoubleNumber& h) const {
  const NullJet r = jet(*this, null_split(h));
  return null_join(NullPair<double>{r.a.v, r.b.v});
}

DoubleNumber FunctionExpr::null_derivative(const DoubleNumber& h) const {
  const NullJet r = jet(*this, null_split(h));
  return null_join(NullPair<double>{r.a.d, r.b.d});
}

FunctionExpr compose(const FunctionExpr& outer, const FunctionExpr& inner) {
  using K = FunctionExpr::Kind;
  switch (outer.kind()) {
    case K::Variable: return inner;
    case K::Constant: return outer;
    case K::Call: {
      const auto p = outer.params();
      return FunctionExpr::call(outer.builtin().name, compose(outer.lhs(), inner), {p.begin(), p.end()});
    }
    case K::Sum:
    case K::Difference:
    case K::Product:
    case K::Quotient:
      return FunctionExpr::binary(outer.kind(), compose(outer.lhs(), inner), compose(outer.rhs(), inner));
    case K::Negate: return FunctionExpr::negate(compose(outer.lhs(), inner));
    case K::Conjugate: return FunctionExpr::conjugate(compose(outer.lhs(), inner));
    case K::Power: return FunctionExpr::power(compose(outer.lhs(), inner), outer.exponent());
  }
  return outer;
}

namespace {

// Binding strength used by the printer; higher binds tighter.
int level(FunctionExpr::Kind k) {
  using K = FunctionExpr::Kind;
  switch (k) {
    case K::Sum:
    case K::Difference: return 1;
    case K::Product:
    case K::Quotient: return 2;
    case K::Negate: return 3;
    case K::Power: return 4;
    default: return 5;
  }
}

std::string constant_text(const DoubleNumber& c) {
  const double t = c.t(), x = c.x();
  if (x == 0.0 && !std::signbit(t)) return format_shortest(t);
  if (t == 0.0 && !std::signbit(t) && !std::signbit(x)) return format_shortest(x) + "j";
  return "(" + to_string(c) + ")";
}

void print(const FunctionExpr& e, std::string& out, int min_level) {
  using K = FunctionExpr::Kind;
  const bool paren = level(e.kind()) < min_level;
  if (paren) out += '(';
  switch (e.kind()) {
    case K::Variable: out += 'h'; break;
    case K::Constant: out += constant_text(e.value()); break;
    case K::Call:
      out += e.builtin().name;
      out += '(';
      print(e.lhs(), out, 0);
      for (double p : e.params()) out += ", " + format_shortest(p);
      out += ')';
      break;
    case K::Conjugate:
      out += "conj(";
      print(e.lhs(), out, 0);
      out += ')';
      break;
    case K::Sum:
    case K::Difference:
    case K::Product:
    case K::Quotient: {
      const int l = level(e.kind());
      static constexpr const char* ops[] = {" + ", " - ", " * ", " / "};
      print(e.lhs(), out, l);
      out += ops[static_cast<int>(e.kind()) - static_cast<int>(K::Sum)];
      print(e.rhs(), out, l + 1);
      break;
    }
    case K::Negate:
      out += '-';
      print(e.lhs(), out, level(K::Negate));
      break;
    case K::Power:
      print(e.lhs(), out, level(K::Power) + 1);
      out += '^';
      out += format_shortest(e.exponent());
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string FunctionExpr::to_string() const {
  std::string out;
  print(*this, out, 0);
  return out;
}

bool operator==(const FunctionExpr& a, const FunctionExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  using K = FunctionExpr::Kind;
  switch (a.kind()) {
    case K::Variable: return true;
    case K::Constant: return a.value() == b.value();
    case K::Call:
      return &a.builtin() == &b.builtin() && std::ranges::equal(a.params(), b.params()) && a.lhs() == b.lhs();
    case K::Power: return a.exponent() == b.exponent() && a.lhs() == b.lhs();
    case K::Negate:
    case K::Conjugate: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

}  // namespace splitplane
