#pragma once

#include <functional>
#include <vector>

#include "splitplane/double_number.hpp"

namespace splitplane {

enum class QuadratureRule { Midpoint, GaussLegendre4 };

/// Oriented parametric path tau -> h(tau) on [tau_a, tau_b] with its exact
/// velocity. orientation = -1 traverses the parameter interval backwards.
struct Curve {
  std::function<DoubleNumber(double)> point;
  std::function<DoubleNumber(double)> velocity;
  double tau_a = 0.0;
  double tau_b = 1.0;
  int panels = 256;
  int orientation = 1;

  DoubleNumber start() const { return point(orientation > 0 ? tau_a : tau_b); }
  DoubleNumber end() const { return point(orientation > 0 ? tau_b : tau_a); }
  Curve reversed() const {
    Curve c = *this;
    c.orientation = -orientation;
    return c;
  }
};

/// Ordered segments; consecutive endpoints must coincide to 1e-12 (scaled).
struct Contour {
  std::vector<Curve> segments;
  bool closed = false;

  /// Throws OpenContour when the segment chain is broken, or when `closed`
  /// is set but the chain does not return to its start.
  void validate() const;
  int total_panels() const;
};

// Factories. Panel counts are per segment (per edge for polygons).

Curve segment(const DoubleNumber& from, const DoubleNumber& to, int panels = 256);

/// Euclidean arc center + r (cos theta + j sin theta), theta from theta0 to theta1.
Curve euclidean_arc(const DoubleNumber& center, double r, double theta0, double theta1, int panels = 1024);
Contour euclidean_circle(const DoubleNumber& center, double r, int panels = 1024);

/// Closed polygon through the vertices (the closing edge is implicit).
Contour polygon(const std::vector<DoubleNumber>& vertices, int panels_per_edge = 64);

/// h0 + eps * rho (cosh psi + j sinh psi) at fixed psi, rho from rho0 to rho1,
/// parametrised by s = ln rho so panels are log-spaced.
Curve hyperbolic_ray(const DoubleNumber& h0, SignFactor eps, double psi, double rho0, double rho1, int panels = 512);

/// h0 + eps * rho (cosh psi + j sinh psi) at fixed rho, psi from psi0 to psi1.
Curve hyperbolic_arc(const DoubleNumber& h0, SignFactor eps, double rho, double psi0, double psi1, int panels = 512);

/// Image of a curve under the Euclidean rotation about h0 by quarter_turns * pi/2.
Curve rotate_quarter_turns(const Curve& c, const DoubleNumber& h0, int quarter_turns);

}  // namespace splitplane
