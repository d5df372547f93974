#include "splitplane/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "quadrature.hpp"
#include "splitplane/elementary.hpp"

namespace splitplane {

namespace {

double euclid(const DoubleNumber& h) { return std::hypot(h.t(), h.x()); }

bool close_points(const DoubleNumber& a, const DoubleNumber& b) {
  return euclid(a - b) <= 1e-12 * std::max({1.0, euclid(a), euclid(b)});
}

void check_panels(int panels) {
  if (panels < 1) throw Error(ErrorKind::Domain, "panel count must be positive");
}

DoubleNumber unit_direction(SignFactor eps, double psi) {
  return to_double<double>(eps) * DoubleNumber(std::cosh(psi), std::sinh(psi));
}

// (t, x) -> (-x, t), applied k times.
DoubleNumber quarter_turn(const DoubleNumber& h, int k) {
  switch (((k % 4) + 4) % 4) {
    case 1: return DoubleNumber(-h.x(), h.t());
    case 2: return DoubleNumber(-h.t(), -h.x());
    case 3: return DoubleNumber(h.x(), -h.t());
    default: return h;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Curves and contours

void Contour::validate() const {
  if (segments.empty()) throw Error(ErrorKind::OpenContour, "contour has no segments");
  for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
    if (!close_points(segments[i].end(), segments[i + 1].start())) {
      throw Error(ErrorKind::OpenContour, "segment " + std::to_string(i) + " does not meet its successor");
    }
  }
  if (closed && !close_points(segments.back().end(), segments.front().start())) {
    throw Error(ErrorKind::OpenContour, "contour does not return to its start");
  }
}

int Contour::total_panels() const {
  int n = 0;
  for (const Curve& c : segments) n += c.panels;
  return n;
}

Curve segment(const DoubleNumber& from, const DoubleNumber& to, int panels) {
  check_panels(panels);
  const DoubleNumber d = to - from;
  return {[from, d](double tau) { return from + d * tau; }, [d](double) { return d; }, 0.0, 1.0, panels, 1};
}

Curve euclidean_arc(const DoubleNumber& center, double r, double theta0, double theta1, int panels) {
  check_panels(panels);
  return {[center, r](double th) { return center + DoubleNumber(r * std::cos(th), r * std::sin(th)); },
          [r](double th) { return DoubleNumber(-r * std::sin(th), r * std::cos(th)); },
          std::min(theta0, theta1),
          std::max(theta0, theta1),
          panels,
          theta1 >= theta0 ? 1 : -1};
}

Contour euclidean_circle(const DoubleNumber& center, double r, int panels) {
  return {{euclidean_arc(center, r, 0.0, 2.0 * std::numbers::pi, panels)}, true};
}

Contour polygon(const std::vector<DoubleNumber>& vertices, int panels_per_edge) {
  if (vertices.size() < 3) throw Error(ErrorKind::Domain, "polygon needs at least three vertices");
  Contour c;
  c.closed = true;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    c.segments.push_back(segment(vertices[i], vertices[(i + 1) % vertices.size()], panels_per_edge));
  }
  return c;
}

Curve hyperbolic_ray(const DoubleNumber& h0, SignFactor eps, double psi, double rho0, double rho1, int panels) {
  check_panels(panels);
  if (!(rho0 > 0.0 && rho1 > 0.0)) throw Error(ErrorKind::Domain, "ray radii must be positive");
  const DoubleNumber dir = unit_direction(eps, psi);
  const double s0 = std::log(rho0), s1 = std::log(rho1);
  return {[h0, dir](double s) { return h0 + dir * std::exp(s); },
          [dir](double s) { return dir * std::exp(s); },
          std::min(s0, s1),
          std::max(s0, s1),
          panels,
          s1 >= s0 ? 1 : -1};
}

Curve hyperbolic_arc(const DoubleNumber& h0, SignFactor eps, double rho, double psi0, double psi1, int panels) {
  check_panels(panels);
  if (!(rho > 0.0)) throw Error(ErrorKind::Domain, "arc radius must be positive");
  const DoubleNumber e = to_double<double>(eps) * rho;
  return {[h0, e](double psi) { return h0 + e * DoubleNumber(std::cosh(psi), std::sinh(psi)); },
          [e](double psi) { return e * DoubleNumber(std::sinh(psi), std::cosh(psi)); },
          std::min(psi0, psi1),
          std::max(psi0, psi1),
          panels,
          psi1 >= psi0 ? 1 : -1};
}

Curve rotate_quarter_turns(const Curve& c, const DoubleNumber& h0, int quarter_turns) {
  Curve r = c;
  r.point = [p = c.point, h0, quarter_turns](double tau) { return h0 + quarter_turn(p(tau) - h0, quarter_turns); };
  r.velocity = [v = c.velocity, quarter_turns](double tau) { return quarter_turn(v(tau), quarter_turns); };
  return r;
}

// ---------------------------------------------------------------------------
// Lengths and areas

double curve_length(const Curve& c) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  auto speed = [&c](double tau) { return std::sqrt(std::abs(norm_sq(c.velocity(tau)))); };
  return GK::integrate(speed, c.tau_a, c.tau_b, 20, 1e-13);
}

double curve_length(const Contour& c) {
  detail::CompensatedSum acc;
  for (const Curve& s : c.segments) acc.add(curve_length(s));
  return acc.value();
}

double region_area(const Contour& boundary) {
  if (!boundary.closed) throw Error(ErrorKind::OpenContour, "area needs a closed boundary");
  boundary.validate();
  const DoubleNumber minus_j_quarter(0.0, -0.25);
  detail::DoubleSum acc;
  for (const Curve& c : boundary.segments) {
    acc.add(detail::integrate_parameter(c, detail::Rule::Midpoint, c.panels, [&c](double tau, int) {
      const DoubleNumber h = c.point(tau), v = c.velocity(tau);
      return h * conj(v) - conj(h) * v;
    }));
  }
  return (minus_j_quarter * acc.value()).t();
}

// ---------------------------------------------------------------------------
// Contour integrals

namespace {

DoubleNumber integrate_contour(const DoubleMap& f, const Contour& c, QuadratureRule rule, int panels_override,
                               int divide) {
  detail::DoubleSum acc;
  for (std::size_t i = 0; i < c.segments.size(); ++i) {
    const Curve& s = c.segments[i];
    const int panels = std::max(1, (panels_override > 0 ? panels_override : s.panels) / divide);
    acc.add(detail::integrate_parameter(s, rule, panels, [&](double tau, int k) {
      try {
        return f(s.point(tau)) * s.velocity(tau);
      } catch (const Error& e) {
        throw Error(e.kind(), std::string(e.what()) + " (segment " + std::to_string(i) + ", panel " +
                                  std::to_string(k) + ")");
      }
    }));
  }
  return acc.value();
}

}  // namespace

IntegralResult contour_integral(const DoubleMap& f, const Contour& c, QuadratureRule rule, int panels_override) {
  c.validate();
  IntegralResult r;
  r.value = integrate_contour(f, c, rule, panels_override, 1);
  const DoubleNumber coarse = integrate_contour(f, c, rule, panels_override, 2);
  const double gain = rule == QuadratureRule::Midpoint ? 3.0 : 255.0;
  r.est_error = euclid(r.value - coarse) / gain;
  for (const Curve& s : c.segments) r.panels += panels_override > 0 ? panels_override : s.panels;
  return r;
}

void RegularizationParams::validate() const {
  if (!(psi_max > 0.0) || !(r_inner > 0.0) || !(outer() > r_inner)) {
    throw Error(ErrorKind::Domain, "regularization needs psi_max > 0 and 0 < r_inner < r_outer");
  }
}

Contour gamma_offsets(int n, const RegularizationParams& reg, int panels) {
  if (n < 1 || n > 4) throw Error(ErrorKind::Domain, "contour variant must be 1..4");
  reg.validate();
  const DoubleNumber origin(0.0);
  const double psi = reg.psi_max, r_in = reg.r_inner, r_out = reg.outer();
  Contour c;
  c.segments = {
      hyperbolic_ray(origin, SignFactor::One, -psi, r_in, r_out, panels),
      hyperbolic_arc(origin, SignFactor::One, r_out, -psi, psi, panels),
      hyperbolic_ray(origin, SignFactor::One, psi, r_out, r_in, panels),
  };
  for (Curve& s : c.segments) s = rotate_quarter_turns(s, origin, n - 1);
  return c;
}

Contour closed_sector_offsets(const RegularizationParams& reg, int panels) {
  Contour c = gamma_offsets(1, reg, panels);
  c.segments.push_back(hyperbolic_arc(DoubleNumber(0.0), SignFactor::One, reg.r_inner, reg.psi_max, -reg.psi_max, panels));
  c.closed = true;
  return c;
}

DoubleNumber power_residue(double alpha, const DoubleNumber& /*h0: the integrand is translation invariant*/,
                           const RegularizationParams& reg, ResidueShape shape, int panels) {
  const bool integral = std::nearbyint(alpha) == alpha && std::abs(alpha) < 1e9;
  const DoubleMap integrand = [alpha, integral](const DoubleNumber& u) {
    if (is_cone(u)) throw Error(ErrorKind::Cone, "quadrature node on Con(h0)");
    return integral ? pow_int(u, static_cast<long>(alpha)) : pow_real(u, alpha);
  };
  auto run = [&](const Contour& c) {
    return integrate_contour(integrand, c, QuadratureRule::GaussLegendre4, 0, 1);
  };
  if (shape == ResidueShape::ClosedSector) return run(closed_sector_offsets(reg, panels));
  return run(gamma_offsets(1, reg, panels)) + run(gamma_offsets(3, reg, panels));
}

DoubleNumber cauchy_value(const DoubleMap& f, const DoubleNumber& h0, const RegularizationParams& reg, int n,
                          int panels) {
  const DoubleMap integrand = [&f, &h0](const DoubleNumber& u) {
    if (is_cone(u)) throw Error(ErrorKind::Cone, "quadrature node on Con(h0)");
    return f(h0 + u) * inv(u);
  };
  const DoubleNumber loop =
      integrate_contour(integrand, gamma_offsets(n, reg, panels), QuadratureRule::GaussLegendre4, 0, 1);
  const double sign = n % 2 == 1 ? 1.0 : -1.0;
  // 1/j = j
  return DoubleNumber(0.0, sign * 2.0 / reg.ell_h()) * loop;
}

}  // namespace splitplane
