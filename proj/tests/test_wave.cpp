#include <doctest.h>

#include <cmath>

#include <boost/math/tools/roots.hpp>

#include "oracles.hpp"
#include "splitplane/error.hpp"
#include "splitplane/expr.hpp"
#include "splitplane/holomorphy.hpp"
#include "splitplane/wave.hpp"

using namespace splitplane;

namespace {

const FunctionExpr H = FunctionExpr::variable();

WaveSolution plain(const FunctionExpr& f) { return {f, 0.0, false, "test"}; }

// Direct evaluation of phi0 + ln((t^2 - x^2) / R^2).
double log_oracle(double R, double phi0, double t, double x) { return phi0 + std::log((t * t - x * x) / (R * R)); }

}  // namespace

TEST_CASE("log circle solution examples") {
  const WaveSolution sol = log_circle_solution(1, 1);
  CHECK(potential(sol, {1, 0}) == doctest::Approx(1).epsilon(1e-15));
  CHECK(potential(sol, {2, 0}) == doctest::Approx(1 + std::log(4.0)).epsilon(1e-15));
  CHECK(potential(sol, {2, 0}) == doctest::Approx(2.3862944).epsilon(1e-7));
  for (const DoubleNumber& h : hyperbolic_circle_samples(1, 100, 3)) {
    CHECK(norm_sq(h) == doctest::Approx(1).epsilon(1e-13));
    CHECK(std::abs(potential(sol, h) - 1) < 1e-12);
  }
  oracle::Rng rng(51);
  for (double R : {0.5, 1.0, 3.0}) {
    const WaveSolution s = log_circle_solution(R, -0.7);
    for (int i = 0; i < 200; ++i) {
      const DoubleNumber h = rng.null_point(0.05, 10, 0.05, 10);
      CHECK(potential(s, h) == doctest::Approx(log_oracle(R, -0.7, h.t(), h.x())).epsilon(1e-12));
    }
  }
  bool threw = false;
  try {
    (void)potential(sol, {0, 1});
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::Domain;
  }
  CHECK(threw);
}

TEST_CASE("potential of simple maps") {
  oracle::Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    const DoubleNumber h = rng.point(-3, 3);
    CHECK(potential(plain(H), h) == h.t());
    CHECK(potential(plain(FunctionExpr::power(H, 2)), h) == doctest::Approx(h.t() * h.t() + h.x() * h.x()));
    CHECK(potential(WaveSolution{H, 2.5, false, ""}, h) == doctest::Approx(h.t() + 2.5));
  }
}

TEST_CASE("time slices") {
  const WaveSolution sol = log_circle_solution(1, 1);
  for (double t : {1.0, 2.0, 3.0, 4.0}) {
    const auto slice = time_slice(sol, t, {-0.99 * t, 0.99 * t}, 101);
    REQUIRE(slice.size() == 101);
    const auto& mid = slice[50];
    CHECK(mid.x == doctest::Approx(0).scale(1));
    REQUIRE(mid.phi);
    CHECK(*mid.phi == doctest::Approx(1 + 2 * std::log(t)).epsilon(1e-13));
    for (std::size_t k = 0; k < slice.size(); ++k) {
      REQUIRE(slice[k].phi);
      CHECK(*slice[k].phi == doctest::Approx(*slice[100 - k].phi).epsilon(1e-12));
      CHECK(*slice[k].phi <= *mid.phi);
      if (k > 0 && k <= 50) CHECK(*slice[k].phi > *slice[k - 1].phi);
    }
  }
  // Past the cone the potential is undefined: gaps, not errors.
  const auto wide = time_slice(sol, 1, {-2, 2}, 41);
  int gaps = 0;
  for (const auto& p : wide) gaps += p.phi ? 0 : 1;
  CHECK(gaps > 0);
  CHECK(gaps < 41);
  CHECK_FALSE(wide.front().phi);
  // F = h: phi = t everywhere.
  for (const auto& p : time_slice(plain(H), 1.5, {-3, 3}, 13)) {
    REQUIRE(p.phi);
    CHECK(*p.phi == 1.5);
  }
}

TEST_CASE("verify_solution examples") {
  const WaveSolution sol = log_circle_solution(1, 1);
  const VerifyReport r = verify_solution(sol, hyperbolic_circle_samples(1, 1000), 1e-6, {1e-3, 2});
  CHECK(r.boundary_max_dev <= 1e-12);
  CHECK(r.interior_max_box_residual < 1e-6);
  CHECK(r.interior_points == 19 * 17);
  CHECK(r.pass);

  // U = t^3 is not wave-harmonic: box t^3 = 6t, largest at t = 3.
  const FunctionExpr t_part = (H + FunctionExpr::conjugate(H)) / FunctionExpr::constant(DoubleNumber(2, 0));
  const WaveSolution cubic = plain(FunctionExpr::power(t_part, 3));
  const VerifyReport c = verify_solution(cubic, {}, 1e-6, {1e-3, 2});
  CHECK(c.interior_max_box_residual == doctest::Approx(18).epsilon(1e-6));
  CHECK_FALSE(c.pass);
  const auto probes = default_probe_grid(3, 3);
  for (const auto& p : probes) {
    CHECK(std::abs(box_residual([&](double t, double x) { return potential(cubic, {t, x}); }, p, {1e-3, 2}) - 6 * p.t()) <
          1e-6);
    CHECK(p.t() >= 1.2);
    CHECK(p.t() <= 3);
    CHECK(std::abs(p.x()) <= 0.8 * p.t() + 1e-12);
  }
  // Wrong boundary: samples on t^2 - x^2 = 4 sit at phi = 1 + ln 4.
  const VerifyReport off = verify_solution(sol, hyperbolic_circle_samples(2, 50), 1e-6, {1e-3, 2});
  CHECK(off.boundary_max_dev == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK_FALSE(off.pass);
}

TEST_CASE("property: holomorphic solutions have order-2 box residuals") {
  for (const FunctionExpr& f : {FunctionExpr::call("exp", H), FunctionExpr::power(H, 3), FunctionExpr::call("sin", H)}) {
    const WaveSolution sol = plain(f);
    for (double s : {1e-2, 5e-3, 2.5e-3}) {
      const VerifyReport r = verify_solution(sol, {}, 1e-6, {s, 2});
      // The five-point stencil cancels U(a) + V(b) terms exactly; what is
      // left is roundoff ~ eps |phi| / s^2, well under C s^2 with C = 1.
      CHECK(r.interior_max_box_residual <= std::max(s * s, 1e-15 * 50 / (s * s)));
    }
  }
}

TEST_CASE("property: scaling law of the log solution") {
  const WaveSolution sol = log_circle_solution(1.3, 0.4);
  oracle::Rng rng(53);
  for (int i = 0; i < 2000; ++i) {
    const DoubleNumber h = rng.null_point(0.01, 5, 0.01, 5);
    CHECK(std::abs(potential(sol, 2.0 * h) - (potential(sol, h) + 2 * std::log(2.0))) <= 1e-12);
  }
}

TEST_CASE("property: level sets are hyperbolic circles") {
  const WaveSolution sol = log_circle_solution(1, 1);
  for (double level : {-1.0, 0.5, 1.0, 2.0, 3.5}) {
    std::vector<double> invariant;
    for (double x = -3; x <= 3; x += 0.25) {
      // Solve phi(t, x) = level for t > |x| by bracketing bisection.
      const auto g = [&](double t) { return potential(sol, {t, x}) - level; };
      double lo = std::abs(x) + 1e-12, hi = std::abs(x) + 1;
      while (g(hi) < 0) hi *= 2;
      boost::math::tools::eps_tolerance<double> tol(52);
      const auto [a, b] = boost::math::tools::bisect(g, lo, hi, tol);
      const double t = (a + b) / 2;
      invariant.push_back(t * t - x * x);
    }
    for (double v : invariant) CHECK(v == doctest::Approx(invariant.front()).epsilon(1e-10));
    CHECK(invariant.front() == doctest::Approx(std::exp(level - 1)).epsilon(1e-10));
  }
}
