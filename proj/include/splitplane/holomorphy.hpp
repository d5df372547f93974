#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "splitplane/curve.hpp"
#include "splitplane/double_number.hpp"

namespace splitplane {

/// Any map of the double plane; FunctionExpr converts implicitly.
using DoubleMap = std::function<DoubleNumber(const DoubleNumber&)>;
/// Real function of (t, x), e.g. a component U or V.
using RealField = std::function<double(double, double)>;

struct StencilSpec {
  double step = 1e-5;
  int order = 2;  // 2 or 4
};

/// order 2, step 1e-5 * max(1, |t|, |x|)
StencilSpec default_stencil(const DoubleNumber& h);

/// U and V of F = U + jV.
RealField real_part(const DoubleMap& f);
RealField imag_part(const DoubleMap& f);

/// First partials of U and V by central differences.
struct Partials {
  double Ut = 0.0, Ux = 0.0, Vt = 0.0, Vx = 0.0;
};
Partials partials(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s);

/// t-directional derivative (F(h+d) - F(h-d)) / 2d, d real.
DoubleNumber derivative(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s);
/// Default step, fourth-order stencil.
DoubleNumber derivative(const DoubleMap& f, const DoubleNumber& h);

/// (U,t - V,x, U,x - V,t)
Eigen::Vector2d cr_residual(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s);

/// ((ln rho_F),t - (psi_F),x, (ln rho_F),x - (psi_F),t). ConeError when the
/// stencil images leave the quadrant of F(h).
Eigen::Vector2d polar_cr_residual(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s);

/// Central estimate of g,tt - g,xx (five points for order 2, nine for order 4).
double box_residual(const RealField& g, const DoubleNumber& h, const StencilSpec& s);

/// F'(h) conj(F'(h)), signed; equals the Jacobian determinant of (U, V).
double conformal_factor(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s);
double conformal_factor(const DoubleMap& f, const DoubleNumber& h);

/// [[U,t, U,x], [V,t, V,x]]
Eigen::Matrix2d jacobian(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s);

/// V(target) - V(base) = integral of U,x dt + U,t dx along a path from base
/// to target; partials of U by default-stencil central differences,
/// Gauss-Legendre panels. Domain error if the path endpoints do not match.
double harmonic_conjugate(const RealField& u, const DoubleNumber& base, const DoubleNumber& target,
                          const Curve& path);

/// U,t V,t - U,x V,x
double gradient_orthogonality(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s);

/// (roth, divh) = (U,x - V,t, U,t - V,x)
Eigen::Vector2d divrot_residual(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s);

struct ResidualSample {
  double t = 0.0, x = 0.0, r1 = 0.0, r2 = 0.0;
};

/// cr_residual on an n_t x n_x lattice; points whose stencil leaves the
/// domain of F are omitted.
std::vector<ResidualSample> residual_grid(const DoubleMap& f, double t0, double t1, double x0, double x1,
                                          int n_t, int n_x, const StencilSpec& s);

}  // namespace splitplane
