#pragma once

#include <cmath>
#include <optional>

#include "splitplane/curve.hpp"
#include "splitplane/holomorphy.hpp"

namespace splitplane {

/// Length of a curve in the pseudo-Euclidean metric: integral of
/// sqrt|h' conj(h')|, adaptive Gauss-Kronrod.
double curve_length(const Curve& c);
double curve_length(const Contour& c);

/// -(j/4) * closed integral of (h dh~ - h~ dh); OpenContour if not closed.
double region_area(const Contour& boundary);

struct IntegralResult {
  DoubleNumber value;
  int panels = 0;
  double est_error = 0.0;  // |I(N) - I(N/2)| scaled by the rule's order
};

/// Composite quadrature of F(h(tau)) h'(tau) dtau. panels_override > 0
/// replaces every segment's own panel count.
IntegralResult contour_integral(const DoubleMap& f, const Contour& c,
                                QuadratureRule rule = QuadratureRule::Midpoint, int panels_override = 0);

/// Hyperbolic-angle cutoff Psi and the radii of the regularised contours.
/// The outer radius defaults to exp(-Psi), which keeps the Euclidean reach
/// of the outer arc near 1/2.
struct RegularizationParams {
  double psi_max = 5.0;
  double r_inner = 1e-8;
  std::optional<double> r_outer;

  double ell_h() const { return 4.0 * psi_max; }
  double outer() const { return r_outer.value_or(std::exp(-psi_max)); }
  void validate() const;
};

/// Open contour Gamma_n as offsets u = h - h0: ray at psi = -Psi from
/// r_inner to r_outer, arc at r_outer over [-Psi, Psi], ray back at
/// psi = +Psi; sectors 2..4 are quarter-turn rotations of sector 1.
Contour gamma_offsets(int n, const RegularizationParams& reg, int panels = 2048);

/// gamma_offsets(1) closed by the inner arc at r_inner: a cone-free annular sector.
Contour closed_sector_offsets(const RegularizationParams& reg, int panels = 2048);

enum class ResidueShape { ClosedSector, Crossing };

/// Integral of (h - h0)^alpha dh. Crossing integrates over the opposite
/// sectors Gamma_1 and Gamma_3, which gives j * ell_h() for alpha = -1.
/// Non-integer alpha is only defined on the sector-1 shape.
DoubleNumber power_residue(double alpha, const DoubleNumber& h0, const RegularizationParams& reg,
                           ResidueShape shape, int panels = 2048);

/// (-1)^(n+1) (2 / (ell_h j)) * integral over Gamma_n of F(h) / (h - h0) dh.
DoubleNumber cauchy_value(const DoubleMap& f, const DoubleNumber& h0, const RegularizationParams& reg,
                          int n = 1, int panels = 2048);

/// Euclidean circle of radius r in hyperbolic polar form: r / sqrt(cosh 2 psi).
inline double circle_polar_radius(double r, double psi) { return r / std::sqrt(std::cosh(2.0 * psi)); }

}  // namespace splitplane
