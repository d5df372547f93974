#include "splitplane/wave.hpp"

#include <algorithm>
#include <cmath>

namespace splitplane {

WaveSolution log_circle_solution(double R, double phi0) {
  if (!(R > 0.0) || !std::isfinite(R)) throw Error(ErrorKind::Domain, "log solution needs R > 0");
  const FunctionExpr h = FunctionExpr::variable();
  const FunctionExpr F = FunctionExpr::constant(DoubleNumber(2.0)) *
                             FunctionExpr::call("log", h / FunctionExpr::constant(DoubleNumber(R))) +
                         FunctionExpr::constant(DoubleNumber(phi0));
  return {F, phi0, true, "phi = phi0 on the hyperbolic circle t^2 - x^2 = R^2"};
}

double potential(const WaveSolution& sol, const DoubleNumber& h) {
  const double u = sol.F(h).t();
  return sol.phi0_in_F ? u : u + sol.phi0;
}

std::vector<SlicePoint> time_slice(const WaveSolution& sol, double t, Interval x_range, int n) {
  if (n < 1) throw Error(ErrorKind::Domain, "slice needs at least one sample");
  std::vector<SlicePoint> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double x = n == 1 ? x_range.lo : x_range.lo + (x_range.hi - x_range.lo) * k / (n - 1);
    SlicePoint p{x, std::nullopt};
    try {
      p.phi = potential(sol, DoubleNumber(t, x));
    } catch (const Error&) {
      // gap: the potential is undefined here (e.g. on or beyond the cone)
    }
    out.push_back(p);
  }
  return out;
}

std::vector<DoubleNumber> hyperbolic_circle_samples(double R, int n, double psi_max) {
  std::vector<DoubleNumber> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double psi = n == 1 ? 0.0 : -psi_max + 2.0 * psi_max * k / (n - 1);
    out.emplace_back(R * std::cosh(psi), R * std::sinh(psi));
  }
  return out;
}

std::vector<DoubleNumber> default_probe_grid(int probes_t, int probes_x) {
  std::vector<DoubleNumber> out;
  for (int i = 0; i < probes_t; ++i) {
    const double t = probes_t == 1 ? 1.2 : 1.2 + 1.8 * i / (probes_t - 1);
    for (int k = 0; k < probes_x; ++k) {
      const double x = probes_x == 1 ? 0.0 : -0.8 * t + 1.6 * t * k / (probes_x - 1);
      out.emplace_back(t, x);
    }
  }
  return out;
}

VerifyReport verify_solution(const WaveSolution& sol, const std::vector<DoubleNumber>& boundary_samples, double tol,
                             const StencilSpec& s, const std::vector<DoubleNumber>& probes) {
  VerifyReport r;
  bool ok = true;
  for (const DoubleNumber& h : boundary_samples) {
    try {
      r.boundary_max_dev = std::max(r.boundary_max_dev, std::abs(potential(sol, h) - sol.phi0));
    } catch (const Error&) {
      ok = false;
    }
  }
  const RealField phi = [&sol](double t, double x) { return potential(sol, DoubleNumber(t, x)); };
  for (const DoubleNumber& h : probes) {
    try {
      r.interior_max_box_residual = std::max(r.interior_max_box_residual, std::abs(box_residual(phi, h, s)));
      ++r.interior_points;
    } catch (const Error&) {
      ok = false;
    }
  }
  r.pass = ok && r.boundary_max_dev <= tol && r.interior_max_box_residual <= tol;
  return r;
}

}  // namespace splitplane
