#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "splitplane/error.hpp"

namespace splitplane {

/// Element t + jx of the double-number plane, j*j = 1.
///
/// Components are always finite: any operation that would produce an
/// infinity or NaN throws Error(Overflow) instead, so downstream code never
/// sees non-finite payloads.
template <typename Scalar>
class Double {
 public:
  using value_type = Scalar;

  Double() = default;
  // Reals embed with zero imaginary part.
  Double(Scalar t) : Double(t, Scalar(0)) {}  // NOLINT(google-explicit-constructor)
  Double(Scalar t, Scalar x) : t_(t), x_(x) {
    if (!std::isfinite(t_) || !std::isfinite(x_)) {
      throw Error(ErrorKind::Overflow, "non-finite double-number component");
    }
  }

  Scalar t() const { return t_; }
  Scalar x() const { return x_; }

  Double& operator+=(const Double& o) { return *this = Double(t_ + o.t_, x_ + o.x_); }
  Double& operator-=(const Double& o) { return *this = Double(t_ - o.t_, x_ - o.x_); }
  Double& operator*=(const Double& o) {
    return *this = Double(t_ * o.t_ + x_ * o.x_, t_ * o.x_ + x_ * o.t_);
  }
  Double& operator/=(const Double& o);

  Double& operator*=(Scalar s) { return *this = Double(t_ * s, x_ * s); }
  Double& operator/=(Scalar s) { return *this = Double(t_ / s, x_ / s); }

  friend bool operator==(const Double& a, const Double& b) { return a.t_ == b.t_ && a.x_ == b.x_; }
  friend bool operator!=(const Double& a, const Double& b) { return !(a == b); }

 private:
  Scalar t_ = Scalar(0);
  Scalar x_ = Scalar(0);
};

using DoubleNumber = Double<double>;

template <typename S> Double<S> operator+(Double<S> a, const Double<S>& b) { return a += b; }
template <typename S> Double<S> operator-(Double<S> a, const Double<S>& b) { return a -= b; }
template <typename S> Double<S> operator*(Double<S> a, const Double<S>& b) { return a *= b; }
template <typename S> Double<S> operator/(Double<S> a, const Double<S>& b) { return a /= b; }
template <typename S> Double<S> operator-(const Double<S>& a) { return Double<S>(-a.t(), -a.x()); }
template <typename S> Double<S> operator+(const Double<S>& a) { return a; }

template <typename S> Double<S> operator*(Double<S> a, S s) { return a *= s; }
template <typename S> Double<S> operator*(S s, Double<S> a) { return a *= s; }
template <typename S> Double<S> operator/(Double<S> a, S s) { return a /= s; }
template <typename S> Double<S> operator+(const Double<S>& a, S s) { return a + Double<S>(s); }
template <typename S> Double<S> operator+(S s, const Double<S>& a) { return Double<S>(s) + a; }
template <typename S> Double<S> operator-(const Double<S>& a, S s) { return a - Double<S>(s); }
template <typename S> Double<S> operator-(S s, const Double<S>& a) { return Double<S>(s) - a; }
template <typename S> Double<S> operator/(S s, const Double<S>& a) { return Double<S>(s) / a; }

/// The imaginary unit j.
template <typename S = double>
Double<S> unit_j() {
  return Double<S>(S(0), S(1));
}

template <typename S>
Double<S> mul(const Double<S>& a, const Double<S>& b) {
  return a * b;
}

template <typename S>
Double<S> conj(const Double<S>& h) {
  return Double<S>(h.t(), -h.x());
}

/// h * conj(h) = t^2 - x^2, evaluated as (t+x)(t-x) to stay accurate near the cone.
template <typename S>
S norm_sq(const Double<S>& h) {
  return (h.t() + h.x()) * (h.t() - h.x());
}

/// sqrt|t^2 - x^2|; zero exactly on Con(0).
template <typename S>
S modulus(const Double<S>& h) {
  return std::sqrt(std::abs(norm_sq(h)));
}

template <typename S>
bool is_cone(const Double<S>& h) {
  return std::abs(h.t()) == std::abs(h.x());
}

/// Tolerance-band cone test: ||t| - |x|| <= tol * max(|t|, |x|).
/// The origin counts as near.
template <typename S>
bool is_near_cone(const Double<S>& h, S tol) {
  const S at = std::abs(h.t()), ax = std::abs(h.x());
  return std::abs(at - ax) <= tol * std::max(at, ax);
}

template <typename S>
Double<S> inv(const Double<S>& h) {
  const S n = norm_sq(h);
  if (n == S(0)) {
    throw Error(ErrorKind::ZeroDivisor, "inverse of a zero divisor");
  }
  return Double<S>(h.t() / n, -h.x() / n);
}

template <typename S>
Double<S>& Double<S>::operator/=(const Double<S>& o) {
  return *this *= inv(o);
}

// ---------------------------------------------------------------------------
// Regions

enum class Region {
  QuadrantI,
  QuadrantII,
  QuadrantIII,
  QuadrantIV,
  ConePlusUp,
  ConePlusDown,
  ConeMinusUp,
  ConeMinusDown,
  Origin,
};

inline const char* to_string(Region r) {
  switch (r) {
    case Region::QuadrantI: return "QuadrantI";
    case Region::QuadrantII: return "QuadrantII";
    case Region::QuadrantIII: return "QuadrantIII";
    case Region::QuadrantIV: return "QuadrantIV";
    case Region::ConePlusUp: return "ConePlusUp";
    case Region::ConePlusDown: return "ConePlusDown";
    case Region::ConeMinusUp: return "ConeMinusUp";
    case Region::ConeMinusDown: return "ConeMinusDown";
    case Region::Origin: return "Origin";
  }
  return "?";
}

inline bool is_quadrant(Region r) {
  return r == Region::QuadrantI || r == Region::QuadrantII || r == Region::QuadrantIII ||
         r == Region::QuadrantIV;
}

inline bool is_cone_region(Region r) { return !is_quadrant(r) && r != Region::Origin; }

/// Exact classification. Quadrants: I t>|x|, II x>|t|, III -t>|x|, IV -x>|t|.
/// Con+ is t = x, Con- is t = -x; "up" sub-cones have t > 0.
template <typename S>
Region classify(const Double<S>& h) {
  const S t = h.t(), x = h.x();
  if (t == S(0) && x == S(0)) return Region::Origin;
  const S at = std::abs(t), ax = std::abs(x);
  if (at > ax) return t > S(0) ? Region::QuadrantI : Region::QuadrantIII;
  if (ax > at) return x > S(0) ? Region::QuadrantII : Region::QuadrantIV;
  if (t == x) return t > S(0) ? Region::ConePlusUp : Region::ConePlusDown;
  return t > S(0) ? Region::ConeMinusUp : Region::ConeMinusDown;
}

// ---------------------------------------------------------------------------
// Null (isotropic) basis: a = t + x, b = t - x. Multiplication is componentwise.

template <typename Scalar>
struct NullPair {
  Scalar a = Scalar(0);
  Scalar b = Scalar(0);

  friend bool operator==(const NullPair& l, const NullPair& r) { return l.a == r.a && l.b == r.b; }
};

template <typename S>
NullPair<S> null_split(const Double<S>& h) {
  return {h.t() + h.x(), h.t() - h.x()};
}

template <typename S>
Double<S> null_join(const NullPair<S>& p) {
  return Double<S>((p.a + p.b) / S(2), (p.a - p.b) / S(2));
}

// ---------------------------------------------------------------------------
// Hyperbolic polar form h = eps * rho * (cosh psi + j sinh psi)

enum class SignFactor { One, J, MinusOne, MinusJ };

inline const char* to_string(SignFactor e) {
  switch (e) {
    case SignFactor::One: return "1";
    case SignFactor::J: return "j";
    case SignFactor::MinusOne: return "-1";
    case SignFactor::MinusJ: return "-j";
  }
  return "?";
}

inline Region region_of(SignFactor e) {
  switch (e) {
    case SignFactor::One: return Region::QuadrantI;
    case SignFactor::J: return Region::QuadrantII;
    case SignFactor::MinusOne: return Region::QuadrantIII;
    case SignFactor::MinusJ: return Region::QuadrantIV;
  }
  return Region::Origin;
}

/// Null-basis signs of the sign factor: 1 -> (1,1), j -> (1,-1), -1 -> (-1,-1), -j -> (-1,1).
inline NullPair<int> null_signs(SignFactor e) {
  switch (e) {
    case SignFactor::One: return {1, 1};
    case SignFactor::J: return {1, -1};
    case SignFactor::MinusOne: return {-1, -1};
    case SignFactor::MinusJ: return {-1, 1};
  }
  return {0, 0};
}

template <typename S>
Double<S> to_double(SignFactor e) {
  switch (e) {
    case SignFactor::One: return Double<S>(S(1), S(0));
    case SignFactor::J: return Double<S>(S(0), S(1));
    case SignFactor::MinusOne: return Double<S>(S(-1), S(0));
    case SignFactor::MinusJ: return Double<S>(S(0), S(-1));
  }
  return {};
}

/// {1, j, -1, -j} under multiplication is the Klein four-group (j*j = 1).
inline SignFactor operator*(SignFactor l, SignFactor r) {
  const NullPair<int> a = null_signs(l), b = null_signs(r);
  const int sa = a.a * b.a, sb = a.b * b.b;
  if (sa > 0) return sb > 0 ? SignFactor::One : SignFactor::J;
  return sb < 0 ? SignFactor::MinusOne : SignFactor::MinusJ;
}

template <typename Scalar>
class PolarForm {
 public:
  PolarForm(SignFactor epsilon, Scalar rho, Scalar psi) : epsilon_(epsilon), rho_(rho), psi_(psi) {
    if (!(rho > Scalar(0)) || !std::isfinite(rho) || !std::isfinite(psi)) {
      throw Error(ErrorKind::NotRepresentable, "polar form requires finite rho > 0");
    }
  }

  SignFactor epsilon() const { return epsilon_; }
  Scalar rho() const { return rho_; }
  Scalar psi() const { return psi_; }
  Region region() const { return region_of(epsilon_); }

 private:
  SignFactor epsilon_;
  Scalar rho_;
  Scalar psi_;
};

template <typename S>
PolarForm<S> to_polar(const Double<S>& h) {
  const Region r = classify(h);
  SignFactor eps = SignFactor::One;
  switch (r) {
    case Region::QuadrantI: eps = SignFactor::One; break;
    case Region::QuadrantII: eps = SignFactor::J; break;
    case Region::QuadrantIII: eps = SignFactor::MinusOne; break;
    case Region::QuadrantIV: eps = SignFactor::MinusJ; break;
    default:
      throw Error(ErrorKind::NotRepresentable,
                  std::string("no hyperbolic polar chart on ") + to_string(r));
  }
  // In every quadrant rho = sqrt|ab| and psi = ln|a/b| / 2 with (a, b) the null coordinates.
  const NullPair<S> n = null_split(h);
  const S la = std::log(std::abs(n.a)), lb = std::log(std::abs(n.b));
  const S rho = std::sqrt(std::abs(n.a)) * std::sqrt(std::abs(n.b));
  return PolarForm<S>(eps, rho, (la - lb) / S(2));
}

template <typename S>
Double<S> from_polar(const PolarForm<S>& p) {
  const NullPair<int> s = null_signs(p.epsilon());
  const S a = p.rho() * std::exp(p.psi());
  const S b = p.rho() * std::exp(-p.psi());
  return null_join(NullPair<S>{s.a * a, s.b * b});
}

template <typename S>
std::ostream& operator<<(std::ostream& os, const Double<S>& h) {
  os << h.t() << (std::signbit(h.x()) ? "-" : "+") << std::abs(h.x()) << "j";
  return os;
}

}  // namespace splitplane
