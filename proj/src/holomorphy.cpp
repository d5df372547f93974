#include "splitplane/holomorphy.hpp"

#include <algorithm>
#include <cmath>

#include "quadrature.hpp"

namespace splitplane {

namespace {

void check_stencil(const StencilSpec& s) {
  if (!(s.step > 0.0) || (s.order != 2 && s.order != 4)) {
    throw Error(ErrorKind::Domain, "stencil needs step > 0 and order 2 or 4");
  }
}

template <typename Fn>
auto at_stencil_point(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Domain) throw;
    throw Error(ErrorKind::Domain, std::string("stencil left the domain: ") + e.what());
  }
}

// Central first difference of a sampled quantity along a unit offset.
template <typename T, typename Sample>
T central(Sample&& sample, const StencilSpec& s) {
  const double d = s.step;
  if (s.order == 2) return (sample(d) - sample(-d)) / (2.0 * d);
  return (sample(-2.0 * d) - sample(2.0 * d) + 8.0 * (sample(d) - sample(-d))) / (12.0 * d);
}

DoubleNumber eval(const DoubleMap& f, double t, double x) {
  return at_stencil_point([&] { return f(DoubleNumber(t, x)); });
}

}  // namespace

StencilSpec default_stencil(const DoubleNumber& h) {
  return {1e-5 * std::max({1.0, std::abs(h.t()), std::abs(h.x())}), 2};
}

RealField real_part(const DoubleMap& f) {
  return [f](double t, double x) { return f(DoubleNumber(t, x)).t(); };
}

RealField imag_part(const DoubleMap& f) {
  return [f](double t, double x) { return f(DoubleNumber(t, x)).x(); };
}

Partials partials(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s) {
  check_stencil(s);
  const double t = h.t(), x = h.x();
  // Differences are formed on the double numbers directly, so the
  // t-derivative is exactly what derivative() reports.
  const auto dt = central<DoubleNumber>([&](double d) { return eval(f, t + d, x); }, s);
  const auto dx = central<DoubleNumber>([&](double d) { return eval(f, t, x + d); }, s);
  return {dt.t(), dx.t(), dt.x(), dx.x()};
}

DoubleNumber derivative(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s) {
  check_stencil(s);
  return central<DoubleNumber>([&](double d) { return eval(f, h.t() + d, h.x()); }, s);
}

DoubleNumber derivative(const DoubleMap& f, const DoubleNumber& h) {
  // Fourth order at the default step: order 2 leaves ~1e-8 relative error near poles.
  StencilSpec s = default_stencil(h);
  s.order = 4;
  return derivative(f, h, s);
}

Eigen::Vector2d cr_residual(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s) {
  const Partials p = partials(f, h, s);
  return {p.Ut - p.Vx, p.Ux - p.Vt};
}

Eigen::Vector2d polar_cr_residual(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s) {
  check_stencil(s);
  const DoubleNumber centre = at_stencil_point([&] { return f(h); });
  const Region region = classify(centre);
  if (!is_quadrant(region)) throw Error(ErrorKind::Cone, "F(h) lies on a cone");
  auto polar_at = [&](double t, double x) {
    const DoubleNumber w = eval(f, t, x);
    if (classify(w) != region) throw Error(ErrorKind::Cone, "stencil image crosses a cone line");
    const PolarForm<double> p = to_polar(w);
    return DoubleNumber(std::log(p.rho()), p.psi());  // (ln rho, psi) packed for differencing
  };
  const auto dt = central<DoubleNumber>([&](double d) { return polar_at(h.t() + d, h.x()); }, s);
  const auto dx = central<DoubleNumber>([&](double d) { return polar_at(h.t(), h.x() + d); }, s);
  return {dt.t() - dx.x(), dx.t() - dt.x()};
}

double box_residual(const RealField& g, const DoubleNumber& h, const StencilSpec& s) {
  check_stencil(s);
  const double t = h.t(), x = h.x(), d = s.step;
  auto G = [&](double tt, double xx) { return at_stencil_point([&] { return g(tt, xx); }); };
  const double g0 = G(t, x);
  if (s.order == 2) {
    const double gtt = G(t + d, x) - 2.0 * g0 + G(t - d, x);
    const double gxx = G(t, x + d) - 2.0 * g0 + G(t, x - d);
    return (gtt - gxx) / (d * d);
  }
  const double gtt = -G(t + 2 * d, x) + 16.0 * G(t + d, x) - 30.0 * g0 + 16.0 * G(t - d, x) - G(t - 2 * d, x);
  const double gxx = -G(t, x + 2 * d) + 16.0 * G(t, x + d) - 30.0 * g0 + 16.0 * G(t, x - d) - G(t, x - 2 * d);
  return (gtt - gxx) / (12.0 * d * d);
}

double conformal_factor(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s) {
  return norm_sq(derivative(f, h, s));
}

double conformal_factor(const DoubleMap& f, const DoubleNumber& h) {
  return conformal_factor(f, h, default_stencil(h));
}

Eigen::Matrix2d jacobian(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s) {
  const Partials p = partials(f, h, s);
  Eigen::Matrix2d j;
  j << p.Ut, p.Ux, p.Vt, p.Vx;
  return j;
}

double harmonic_conjugate(const RealField& u, const DoubleNumber& base, const DoubleNumber& target,
                          const Curve& path) {
  const double scale = std::max({1.0, std::abs(base.t()), std::abs(base.x()), std::abs(target.t()),
                                 std::abs(target.x())});
  const DoubleNumber p0 = path.start(), p1 = path.end();
  if (std::abs(p0.t() - base.t()) + std::abs(p0.x() - base.x()) > 1e-12 * scale ||
      std::abs(p1.t() - target.t()) + std::abs(p1.x() - target.x()) > 1e-12 * scale) {
    throw Error(ErrorKind::Domain, "path does not join base to target");
  }
  const DoubleMap as_map = [&u](const DoubleNumber& w) { return DoubleNumber(u(w.t(), w.x())); };
  const DoubleNumber total =
      detail::integrate_parameter(path, detail::Rule::GaussLegendre4, path.panels, [&](double tau, int) {
        const DoubleNumber w = path.point(tau), v = path.velocity(tau);
        const Partials p = partials(as_map, w, default_stencil(w));
        return DoubleNumber(p.Ux * v.t() + p.Ut * v.x());
      });
  return total.t();
}

double gradient_orthogonality(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s) {
  const Partials p = partials(f, h, s);
  return p.Ut * p.Vt - p.Ux * p.Vx;
}

Eigen::Vector2d divrot_residual(const DoubleMap& f, const DoubleNumber& h, const StencilSpec& s) {
  const Partials p = partials(f, h, s);
  return {p.Ux - p.Vt, p.Ut - p.Vx};
}

std::vector<ResidualSample> residual_grid(const DoubleMap& f, double t0, double t1, double x0, double x1,
                                          int n_t, int n_x, const StencilSpec& s) {
  if (n_t < 1 || n_x < 1) throw Error(ErrorKind::Domain, "residual grid needs positive counts");
  std::vector<ResidualSample> out;
  out.reserve(static_cast<std::size_t>(n_t) * n_x);
  for (int i = 0; i < n_t; ++i) {
    const double t = n_t == 1 ? t0 : t0 + (t1 - t0) * i / (n_t - 1);
    for (int k = 0; k < n_x; ++k) {
      const double x = n_x == 1 ? x0 : x0 + (x1 - x0) * k / (n_x - 1);
      try {
        const Eigen::Vector2d r = cr_residual(f, DoubleNumber(t, x), s);
        out.push_back({t, x, r[0], r[1]});
      } catch (const Error&) {
        // outside the domain of F: left as a hole in the grid
      }
    }
  }
  return out;
}

}  // namespace splitplane
