#pragma once

#include <array>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "splitplane/curve.hpp"

namespace splitplane::detail {

// Neumaier-compensated running sum; fixed call order gives reproducible totals.
class CompensatedSum {
 public:
  void add(double v) {
    const double s = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      c_ += (sum_ - s) + v;
    } else {
      c_ += (v - s) + sum_;
    }
    sum_ = s;
  }
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

struct DoubleSum {
  CompensatedSum t, x;
  void add(const DoubleNumber& h) {
    t.add(h.t());
    x.add(h.x());
  }
  DoubleNumber value() const { return DoubleNumber(t.value(), x.value()); }
};

using Rule = QuadratureRule;

/// Sum over panels of w_k * g(tau_k) for a curve's own parameter, honouring
/// orientation. g receives (tau, panel index).
template <typename G>
DoubleNumber integrate_parameter(const Curve& c, Rule rule, int panels, G&& g) {
  DoubleSum acc;
  const double h = (c.tau_b - c.tau_a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double lo = c.tau_a + k * h;
    if (rule == Rule::Midpoint) {
      acc.add(g(lo + 0.5 * h, k) * h);
    } else {
      using GL = boost::math::quadrature::gauss<double, 4>;
      const auto& x = GL::abscissa();
      const auto& w = GL::weights();
      const double mid = lo + 0.5 * h, half = 0.5 * h;
      for (std::size_t i = 0; i < x.size(); ++i) {
        acc.add(g(mid - half * x[i], k) * (w[i] * half));
        acc.add(g(mid + half * x[i], k) * (w[i] * half));
      }
    }
  }
  const DoubleNumber v = acc.value();
  return c.orientation > 0 ? v : -v;
}

}  // namespace splitplane::detail
