#include <doctest.h>

#include <cmath>

#include <Eigen/LU>

#include "oracles.hpp"
#include "splitplane/contour.hpp"
#include "splitplane/elementary.hpp"
#include "splitplane/error.hpp"
#include "splitplane/expr.hpp"
#include "splitplane/holomorphy.hpp"

using namespace splitplane;
using oracle::abs_err;
using oracle::rel_err;

namespace {

const FunctionExpr H = FunctionExpr::variable();

FunctionExpr fn(const std::string& name, std::vector<double> params = {}) {
  return FunctionExpr::call(name, H, std::move(params));
}

const FunctionExpr SQ = FunctionExpr::power(H, 2);
const FunctionExpr CONJ = FunctionExpr::conjugate(H);

StencilSpec step(double s) { return {s, 2}; }

}  // namespace

TEST_CASE("derivative examples") {
  CHECK(abs_err(derivative(SQ, DoubleNumber(1, 0)), {2, 0}) < 1e-9);
  CHECK(abs_err(derivative(fn("exp"), DoubleNumber(0, 0)), {1, 0}) < 1e-9);
  // Null oracle: cos applied to a = 0.3, b = 0.1.
  const DoubleNumber want = oracle::from_null(std::cos(0.3), std::cos(0.1));
  CHECK(abs_err(derivative(fn("sin"), DoubleNumber(0.2, 0.1)), want) < 1e-9);
  CHECK(want.t() == doctest::Approx(0.9751704).epsilon(1e-7));
  CHECK(want.x() == doctest::Approx(-0.0198338).epsilon(1e-5));
}

TEST_CASE("property: derivative matches the null-basis derivative") {
  oracle::Rng rng(21);
  for (const auto& c : oracle::builtin_cases()) {
    const FunctionExpr f = fn(c.name, c.params);
    for (int i = 0; i < 300; ++i) {
      const DoubleNumber h = oracle::sample(rng, c, 0.01);
      const DoubleNumber want = oracle::lift(c.dref, h);
      INFO(c.name, " at ", h);
      CHECK(rel_err(derivative(f, h), want) < 1e-8);
      CHECK(rel_err(f.null_derivative(h), want) < 1e-12);
    }
  }
}

TEST_CASE("property: transversal directional derivatives agree") {
  oracle::Rng rng(22);
  const FunctionExpr f = fn("sin") * fn("exp");
  for (int i = 0; i < 200; ++i) {
    const DoubleNumber h = rng.point(-1, 1);
    const DoubleNumber d(std::cos(rng.uniform(0, 6.28)), std::sin(rng.uniform(0, 6.28)));
    if (is_near_cone(d, 0.2)) continue;
    const double eps = 1e-5;
    const DoubleNumber dir = (f(h + eps * d) - f(h - eps * d)) / (2 * eps) * inv(d);
    CHECK(rel_err(dir, f.null_derivative(h)) < 1e-7);
  }
}

TEST_CASE("cr_residual examples") {
  oracle::Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Vector2d r = cr_residual(SQ, rng.point(-3, 3), step(1e-4));
    CHECK(std::abs(r[0]) < 1e-8);
    CHECK(std::abs(r[1]) < 1e-8);
    const Eigen::Vector2d rc = cr_residual(CONJ, rng.point(-3, 3), step(1e-4));
    CHECK(std::abs(rc[0] - 2) < 1e-10);
    CHECK(std::abs(rc[1]) < 1e-10);
  }
  // exp at 0.3+0.2j: the discrete residual cancels identically, so halving
  // the step leaves it at roundoff; the partials themselves converge at order 2.
  const DoubleNumber h(0.3, 0.2);
  const DoubleNumber d = exp(h);
  double prev = 0;
  for (double s : {1e-2, 5e-3, 2.5e-3}) {
    const Partials p = partials(fn("exp"), h, step(s));
    const double err = std::abs(p.Ut - d.t()) + std::abs(p.Vt - d.x());
    if (prev > 0) CHECK(prev / err == doctest::Approx(4).epsilon(0.05));
    prev = err;
    CHECK(cr_residual(fn("exp"), h, step(s)).norm() < 1e-12);
  }
}

TEST_CASE("polar_cr_residual examples") {
  const Eigen::Vector2d r = polar_cr_residual(fn("exp"), DoubleNumber(0.5, 0.1), step(1e-4));
  CHECK(r.norm() < 1e-7);
  CHECK(polar_cr_residual(H, DoubleNumber(2, 0.5), step(1e-4)).norm() < 1e-7);
  // conj: ln rho = ln(t^2 - x^2)/2, psi = -artanh(x/t), so the residual is
  // (2t, -2x) / (t^2 - x^2).
  const Eigen::Vector2d rc = polar_cr_residual(CONJ, DoubleNumber(2, 0.5), step(1e-4));
  CHECK(rc[0] == doctest::Approx(4.0 / 3.75).epsilon(1e-7));
  CHECK(rc[1] == doctest::Approx(-1.0 / 3.75).epsilon(1e-7));
  bool threw = false;
  try {
    (void)polar_cr_residual(H, DoubleNumber(1, 1 - 1e-6), step(1e-3));
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::Cone;
  }
  CHECK(threw);
}

TEST_CASE("box_residual examples") {
  const RealField g = [](double t, double x) { return t * t + x * x; };
  CHECK(std::abs(box_residual(g, DoubleNumber(0.7, -1.3), step(1e-3))) < 1e-9);
  const RealField u = real_part(fn("sin"));
  CHECK(std::abs(box_residual(u, DoubleNumber(0.4, 0.2), step(1e-3))) < 1e-6);
  const RealField t2 = [](double t, double) { return t * t; };
  CHECK(box_residual(t2, DoubleNumber(0.4, 0.2), step(1e-3)) == doctest::Approx(2).epsilon(1e-9));
  CHECK(box_residual(t2, DoubleNumber(0.4, 0.2), {1e-3, 4}) == doctest::Approx(2).epsilon(1e-9));
}

TEST_CASE("conformal_factor examples") {
  CHECK(conformal_factor(SQ, DoubleNumber(1, 0)) == doctest::Approx(4).epsilon(1e-9));
  CHECK(conformal_factor(SQ, DoubleNumber(0, 1)) == doctest::Approx(-4).epsilon(1e-9));
  oracle::Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    const DoubleNumber h = rng.point(-5, 5);
    CHECK(conformal_factor(H, h) == doctest::Approx(1).epsilon(1e-9));
    // Jacobian determinant of (t^2 + x^2, 2tx) is 4(t^2 - x^2).
    CHECK(jacobian(SQ, h, default_stencil(h)).determinant() ==
          doctest::Approx(4 * norm_sq(h)).epsilon(1e-7).scale(1));
  }
}

TEST_CASE("property: conformal factor chain rule") {
  oracle::Rng rng(25);
  const FunctionExpr g = fn("sin");
  const FunctionExpr f = fn("exp");
  const FunctionExpr fg = compose(f, g);
  for (int i = 0; i < 500; ++i) {
    const DoubleNumber h = rng.point(-1.5, 1.5);
    const double lhs = conformal_factor(fg, h);
    const double rhs = conformal_factor(f, g(h)) * conformal_factor(g, h);
    CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("harmonic_conjugate examples") {
  const RealField u = [](double t, double x) { return t * t + x * x; };
  const DoubleNumber target(0.8, -0.6);
  const double v = harmonic_conjugate(u, {0, 0}, target, segment({0, 0}, target, 64));
  CHECK(v == doctest::Approx(2 * 0.8 * -0.6).epsilon(1e-8));

  const RealField ut = [](double t, double) { return t; };
  const DoubleNumber a(0.1, 0.2), b(1.4, -0.9);
  CHECK(harmonic_conjugate(ut, a, b, segment(a, b, 16)) == doctest::Approx(b.x() - a.x()).epsilon(1e-9));

  const RealField ue = real_part(fn("exp"));
  const DoubleNumber base(0, 0), end(1.2, 0.7);
  const double ve = harmonic_conjugate(ue, base, end, segment(base, end, 10000));
  CHECK(std::abs(ve - (exp(end).x() - exp(base).x())) < 1e-8);

  bool threw = false;
  try {
    (void)harmonic_conjugate(ue, base, end, segment(base, DoubleNumber(1, 1), 8));
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::Domain;
  }
  CHECK(threw);
}

TEST_CASE("property: harmonic conjugate is path independent") {
  const RealField ue = real_part(fn("exp"));
  const DoubleNumber base(-0.3, 0.2), corner(1.1, 0.2), end(1.1, -0.8);
  const double straight = harmonic_conjugate(ue, base, end, segment(base, end, 4000));
  // Two-leg path as a single curve: piecewise-linear parametrisation.
  Curve bent;
  bent.tau_a = 0;
  bent.tau_b = 2;
  bent.panels = 8000;
  bent.point = [=](double s) { return s <= 1 ? base + s * (corner - base) : corner + (s - 1) * (end - corner); };
  bent.velocity = [=](double s) { return s <= 1 ? corner - base : end - corner; };
  const double other = harmonic_conjugate(ue, base, end, bent);
  CHECK(std::abs(straight - other) <= 1e-8);
  const double arc = harmonic_conjugate(ue, {1, 0}, {0, 1}, euclidean_arc({0, 0}, 1, 0, M_PI / 2, 4000));
  const double chord = harmonic_conjugate(ue, {1, 0}, {0, 1}, segment({1, 0}, {0, 1}, 4000));
  CHECK(std::abs(arc - chord) <= 1e-8);
}

TEST_CASE("gradient_orthogonality examples") {
  CHECK(std::abs(gradient_orthogonality(SQ, DoubleNumber(1, 0.3), step(1e-4))) < 1e-8);
  CHECK(gradient_orthogonality(H, DoubleNumber(1, 0.3), step(1e-4)) == 0.0);
  // conj is anti-holomorphic: U,t = -V,x and U,x = -V,t also make the
  // Minkowski product vanish, so it is no control for this diagnostic.
  CHECK(std::abs(gradient_orthogonality(CONJ, DoubleNumber(1, 0.3), step(1e-4))) < 1e-10);
  // U = t^2, V = t: U,t V,t = 2t.
  const DoubleMap ctl = [](const DoubleNumber& h) { return DoubleNumber(h.t() * h.t(), h.t()); };
  CHECK(gradient_orthogonality(ctl, DoubleNumber(1, 0.3), step(1e-4)) == doctest::Approx(2).epsilon(1e-8));
}

TEST_CASE("divrot_residual examples") {
  oracle::Rng rng(26);
  for (int i = 0; i < 50; ++i) {
    const DoubleNumber h = rng.point(-2, 2);
    CHECK(divrot_residual(SQ, h, step(1e-4)).norm() < 1e-8);
    CHECK(divrot_residual(H, h, step(1e-4)).norm() < 1e-12);
    const Eigen::Vector2d c = divrot_residual(CONJ, h, step(1e-4));
    CHECK(std::abs(c[0]) < 1e-10);
    CHECK(std::abs(c[1] - 2) < 1e-10);
  }
}

TEST_CASE("property: residual suite for every builtin") {
  oracle::Rng rng(27);
  for (const auto& c : oracle::builtin_cases()) {
    const FunctionExpr f = fn(c.name, c.params);
    const RealField u = real_part(f), v = imag_part(f);
    for (int i = 0; i < 40; ++i) {
      const DoubleNumber h = oracle::sample(rng, c, 0.03);
      const double scale = std::max(1.0, rel_err(f.null_derivative(h), {0, 0}));
      for (double s : {1e-2, 5e-3, 2.5e-3, 1e-3}) {
        // Each stencil's discretisation error is C * s^2; the residuals cancel
        // that term, leaving roundoff ~ eps * |F| / s^2 at worst.
        const double floor = 1e-15 * std::max(1.0, rel_err(f(h), {0, 0})) / (s * s);
        const double bound = std::max(1e-6, floor) * scale;
        INFO(c.name, " at ", h, " step ", s);
        CHECK(cr_residual(f, h, step(s)).norm() <= bound);
        CHECK(std::abs(box_residual(u, h, step(s))) <= bound);
        CHECK(std::abs(box_residual(v, h, step(s))) <= bound);
        CHECK(std::abs(gradient_orthogonality(f, h, step(s))) <= bound * scale);
        CHECK(divrot_residual(f, h, step(s)).norm() <= bound);
      }
    }
  }
}

TEST_CASE("residual grid") {
  const auto grid = residual_grid(SQ, -1, 1, -1, 1, 5, 4, step(1e-4));
  CHECK(grid.size() == 20);
  for (const auto& r : grid) CHECK(std::abs(r.r1) + std::abs(r.r2) < 1e-8);
  // log is undefined outside quadrant I: those lattice points are dropped.
  const auto partial = residual_grid(fn("log"), -1, 1, -1, 1, 5, 5, step(1e-4));
  CHECK(partial.size() < 25);
  CHECK_FALSE(partial.empty());
}
