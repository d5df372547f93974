#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "splitplane/double_number.hpp"
#include "splitplane/eigen_support.hpp"

namespace splitplane {

/// Null-basis functor: null_join(f(a), f(b)). Non-finite component values
/// are reported as DomainError.
template <typename S, typename F>
Double<S> apply_componentwise(F&& f, const Double<S>& h) {
  const NullPair<S> n = null_split(h);
  const S fa = f(n.a), fb = f(n.b);
  if (!std::isfinite(fa) || !std::isfinite(fb)) {
    throw Error(ErrorKind::Domain, "profile undefined at a null coordinate");
  }
  return null_join(NullPair<S>{fa, fb});
}

// ---------------------------------------------------------------------------
// Exponential, logarithm, powers, roots

template <typename S>
Double<S> exp(const Double<S>& h) {
  if (std::abs(h.t()) + std::abs(h.x()) > std::log(std::numeric_limits<S>::max())) {
    throw Error(ErrorKind::Overflow, "exp argument out of range");
  }
  const S e = std::exp(h.t());
  return Double<S>(e * std::cosh(h.x()), e * std::sinh(h.x()));
}

/// ln(rho) + j psi, first quadrant only.
template <typename S>
Double<S> log(const Double<S>& h) {
  if (classify(h) != Region::QuadrantI) {
    throw Error(ErrorKind::Domain, "log is defined in quadrant I only");
  }
  const PolarForm<S> p = to_polar(h);
  return Double<S>(std::log(p.rho()), p.psi());
}

template <typename S>
Double<S> pow_int(const Double<S>& h, long n) {
  Double<S> base = n < 0 ? inv(h) : h;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1UL : static_cast<unsigned long>(n);
  Double<S> acc(S(1));
  while (k != 0) {
    if (k & 1UL) acc *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return acc;
}

/// Quadrant I: exp(alpha log h). Upper cones h = s(1 +- j), s > 0:
/// 2^(alpha-1) s^alpha (1 +- j).
template <typename S>
Double<S> pow_real(const Double<S>& h, S alpha) {
  switch (classify(h)) {
    case Region::QuadrantI:
      return exp(alpha * log(h));
    case Region::ConePlusUp:
    case Region::ConeMinusUp: {
      const S s = h.t();
      const S c = std::exp2(alpha - S(1)) * std::pow(s, alpha);
      return Double<S>(c, h.x() > S(0) ? c : -c);
    }
    default:
      throw Error(ErrorKind::Domain, "real power needs quadrant I or an upper cone branch");
  }
}

/// Branch-indexed n-th root. Even n: quadrant I, branches 0..3 carry the
/// sign factors 1, j, -1, -j. Odd n: any quadrant, branch 0 only.
template <typename S>
Double<S> root(const Double<S>& h, int n, int branch = 0) {
  if (n < 2) throw Error(ErrorKind::Domain, "root order must be >= 2");
  const Region r = classify(h);
  if (!is_quadrant(r)) throw Error(ErrorKind::Domain, "root of a zero divisor");
  const PolarForm<S> p = to_polar(h);
  SignFactor eps = p.epsilon();
  if (n % 2 == 0) {
    if (r != Region::QuadrantI) throw Error(ErrorKind::Domain, "even root needs quadrant I");
    if (branch < 0 || branch > 3) throw Error(ErrorKind::Branch, "even root branch must be 0..3");
    eps = static_cast<SignFactor>(branch);
  } else if (branch != 0) {
    throw Error(ErrorKind::Branch, "odd root is single-valued");
  }
  const S inv_n = S(1) / S(n);
  return from_polar(PolarForm<S>(eps, std::pow(p.rho(), inv_n), p.psi() * inv_n));
}

// ---------------------------------------------------------------------------
// Trigonometric and hyperbolic families

enum class TrigKind { Sin, Cos, Tan, Cot };
enum class TrigInvKind { Arcsin, Arccos, Arctan, Arccot };
enum class HypKind { Sinh, Cosh, Tanh, Coth };
enum class HypInvKind { Arsinh, Arcosh, Artanh, Arcoth };

namespace detail {

template <typename S>
bool vanishes(S v) {
  return std::abs(v) <= S(4) * std::numeric_limits<S>::epsilon();
}

template <typename S>
S safe_sqrt(S v) {
  return std::sqrt(std::max(v, S(0)));
}

}  // namespace detail

template <typename S>
Double<S> trig(const Double<S>& h, TrigKind kind) {
  const S t = h.t(), x = h.x();
  const NullPair<S> n = null_split(h);
  switch (kind) {
    case TrigKind::Sin:
      return Double<S>(std::sin(t) * std::cos(x), std::sin(x) * std::cos(t));
    case TrigKind::Cos:
      return Double<S>(std::cos(t) * std::cos(x), -std::sin(t) * std::sin(x));
    case TrigKind::Tan: {
      // cos 2t + cos 2x, factored as 2 cos a cos b
      const S ca = std::cos(n.a), cb = std::cos(n.b);
      if (detail::vanishes(ca) || detail::vanishes(cb)) throw Error(ErrorKind::Pole, "tan pole");
      const S den = S(2) * ca * cb;
      return Double<S>(std::sin(S(2) * t) / den, std::sin(S(2) * x) / den);
    }
    case TrigKind::Cot: {
      // cos 2x - cos 2t = 2 sin a sin b
      const S sa = std::sin(n.a), sb = std::sin(n.b);
      if (detail::vanishes(sa) || detail::vanishes(sb)) throw Error(ErrorKind::Pole, "cot pole");
      const S den = S(2) * sa * sb;
      return Double<S>(std::sin(S(2) * t) / den, -std::sin(S(2) * x) / den);
    }
  }
  return {};
}

/// Principal branches on the fundamental square |t+x| <= 1, |t-x| <= 1
/// (arcsin, arccos). Half sums and half differences of the component
/// inverses are taken with atan2 so the full range is kept.
template <typename S>
Double<S> trig_inv(const Double<S>& h, TrigInvKind kind) {
  const S t = h.t(), x = h.x();
  const NullPair<S> n = null_split(h);
  const S a = n.a, b = n.b;
  switch (kind) {
    case TrigInvKind::Arcsin:
    case TrigInvKind::Arccos: {
      if (std::abs(a) > S(1) || std::abs(b) > S(1)) {
        throw Error(ErrorKind::Domain, "outside the fundamental square |t+x|, |t-x| <= 1");
      }
      const S ra = detail::safe_sqrt(S(1) - a * a), rb = detail::safe_sqrt(S(1) - b * b);
      if (kind == TrigInvKind::Arcsin) {
        const S sum = std::atan2(a * rb + b * ra, ra * rb - a * b);
        const S diff = std::atan2(a * rb - b * ra, ra * rb + a * b);
        return Double<S>(sum / S(2), diff / S(2));
      }
      S sum = std::atan2(ra * b + a * rb, a * b - ra * rb);
      if (sum < S(0)) sum += S(2) * std::numbers::pi_v<S>;
      const S diff = std::atan2(ra * b - a * rb, a * b + ra * rb);
      return Double<S>(sum / S(2), diff / S(2));
    }
    case TrigInvKind::Arctan:
    case TrigInvKind::Arccot: {
      const Double<S> r(std::atan2(S(2) * t, S(1) - t * t + x * x) / S(2),
                        std::atan2(S(2) * x, S(1) + t * t - x * x) / S(2));
      if (kind == TrigInvKind::Arctan) return r;
      return Double<S>(std::numbers::pi_v<S> / S(2) - r.t(), -r.x());
    }
  }
  return {};
}

template <typename S>
Double<S> hyp(const Double<S>& h, HypKind kind) {
  const S t = h.t(), x = h.x();
  const NullPair<S> n = null_split(h);
  switch (kind) {
    case HypKind::Sinh:
      return Double<S>(std::sinh(t) * std::cosh(x), std::sinh(x) * std::cosh(t));
    case HypKind::Cosh:
      return Double<S>(std::cosh(t) * std::cosh(x), std::sinh(t) * std::sinh(x));
    case HypKind::Tanh: {
      // Same expression as the tanh-based form, written as
      // (sinh 2t + j sinh 2x) / (2 cosh a cosh b); tanh is bounded so huge
      // arguments fall back to the null coordinates instead of overflowing.
      if (std::max(std::abs(n.a), std::abs(n.b)) > S(300)) {
        const S ta = std::tanh(n.a), tb = std::tanh(n.b);
        return Double<S>((ta + tb) / S(2), (ta - tb) / S(2));
      }
      const S den = S(2) * std::cosh(n.a) * std::cosh(n.b);
      return Double<S>(std::sinh(S(2) * t) / den, std::sinh(S(2) * x) / den);
    }
    case HypKind::Coth: {
      // (sinh 2t - j sinh 2x) / (cosh 2t - cosh 2x), denominator = 2 sinh a sinh b
      if (n.a == S(0) || n.b == S(0)) throw Error(ErrorKind::Pole, "coth pole on the cone of 0");
      const S den = S(2) * std::sinh(n.a) * std::sinh(n.b);
      return Double<S>(std::sinh(S(2) * t) / den, -std::sinh(S(2) * x) / den);
    }
  }
  return {};
}

template <typename S>
Double<S> hyp_inv(const Double<S>& h, HypInvKind kind) {
  const NullPair<S> n = null_split(h);
  const S a = n.a, b = n.b;
  switch (kind) {
    case HypInvKind::Arsinh: {
      const S p = a * std::sqrt(S(1) + b * b), q = b * std::sqrt(S(1) + a * a);
      return Double<S>(std::asinh(p + q) / S(2), std::asinh(p - q) / S(2));
    }
    case HypInvKind::Arcosh: {
      // A few ulps of slack so cosh images of points with a null coordinate 0 come back.
      const S floor = S(1) - S(8) * std::numeric_limits<S>::epsilon();
      if (!(a >= floor && b >= floor)) {
        throw Error(ErrorKind::Domain, "arcosh principal leaf needs t+x >= 1 and t-x >= 1");
      }
      const S p = detail::safe_sqrt(a * a - S(1)) * b, q = a * detail::safe_sqrt(b * b - S(1));
      return Double<S>(std::asinh(p + q) / S(2), std::asinh(p - q) / S(2));
    }
    case HypInvKind::Artanh: {
      if (!(std::abs(a) < S(1) && std::abs(b) < S(1))) {
        throw Error(ErrorKind::Domain, "artanh needs |t+x| < 1 and |t-x| < 1");
      }
      const S fa = std::atanh(a), fb = std::atanh(b);
      return Double<S>((fa + fb) / S(2), (fa - fb) / S(2));
    }
    case HypInvKind::Arcoth: {
      if (!(std::abs(a) > S(1) && std::abs(b) > S(1))) {
        throw Error(ErrorKind::Domain, "arcoth needs |t+x| > 1 and |t-x| > 1");
      }
      const S fa = std::atanh(S(1) / a), fb = std::atanh(S(1) / b);
      return Double<S>((fa + fb) / S(2), (fa - fb) / S(2));
    }
  }
  return {};
}

template <typename S> Double<S> sin(const Double<S>& h) { return trig(h, TrigKind::Sin); }
template <typename S> Double<S> cos(const Double<S>& h) { return trig(h, TrigKind::Cos); }
template <typename S> Double<S> tan(const Double<S>& h) { return trig(h, TrigKind::Tan); }
template <typename S> Double<S> cot(const Double<S>& h) { return trig(h, TrigKind::Cot); }
template <typename S> Double<S> sinh(const Double<S>& h) { return hyp(h, HypKind::Sinh); }
template <typename S> Double<S> cosh(const Double<S>& h) { return hyp(h, HypKind::Cosh); }
template <typename S> Double<S> tanh(const Double<S>& h) { return hyp(h, HypKind::Tanh); }
template <typename S> Double<S> coth(const Double<S>& h) { return hyp(h, HypKind::Coth); }

// ---------------------------------------------------------------------------
// Homographic maps h -> (a h + b)(c h + d)^-1

template <typename S>
class Homography {
 public:
  using Matrix = DoubleMatrix2<S>;

  Homography(const Double<S>& a, const Double<S>& b, const Double<S>& c, const Double<S>& d) {
    m_ << a, b, c, d;
    check();
  }
  explicit Homography(const Matrix& m) : m_(m) { check(); }

  const Matrix& matrix() const { return m_; }
  Double<S> a() const { return m_(0, 0); }
  Double<S> b() const { return m_(0, 1); }
  Double<S> c() const { return m_(1, 0); }
  Double<S> d() const { return m_(1, 1); }

  Double<S> determinant() const { return a() * d() - b() * c(); }

  Double<S> operator()(const Double<S>& h) const {
    const Double<S> den = c() * h + d();
    if (is_cone(den)) throw Error(ErrorKind::Cone, "argument on the cone of -d/c");
    return (a() * h + b()) * inv(den);
  }

  /// Coefficients (d, -b, -c, a).
  Homography inverse() const { return Homography(d(), -b(), -c(), a()); }

  /// (*this)(other(h)).
  Homography compose(const Homography& other) const {
    return Homography(Matrix(m_ * other.m_));
  }

 private:
  void check() const {
    if (norm_sq(determinant()) == S(0)) {
      throw Error(ErrorKind::Degenerate, "ad - bc is zero or a zero divisor");
    }
  }

  Matrix m_;
};

template <typename S>
Double<S> homographic(const Double<S>& h, const Double<S>& a, const Double<S>& b,
                      const Double<S>& c, const Double<S>& d) {
  return Homography<S>(a, b, c, d)(h);
}

/// Z(h) = (h + 1/h) / 2.
template <typename S>
Double<S> zhukowskiy(const Double<S>& h) {
  return (h + inv(h)) / S(2);
}

}  // namespace splitplane
