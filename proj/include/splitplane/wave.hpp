#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitplane/conformal_grid.hpp"
#include "splitplane/expr.hpp"
#include "splitplane/holomorphy.hpp"

namespace splitplane {

/// Potential phi = Re F (+ phi0 unless folded into F) of an h-holomorphic F.
struct WaveSolution {
  FunctionExpr F;
  double phi0 = 0.0;
  bool phi0_in_F = false;
  std::string description;
};

/// F = 2 log(h / R) + phi0, so phi = phi0 + ln((t^2 - x^2) / R^2) on quadrant I
/// and phi = phi0 on the hyperbolic circle t^2 - x^2 = R^2.
WaveSolution log_circle_solution(double R, double phi0);

double potential(const WaveSolution& sol, const DoubleNumber& h);

struct SlicePoint {
  double x = 0.0;
  std::optional<double> phi;  // empty where the potential is undefined (gap)
};

std::vector<SlicePoint> time_slice(const WaveSolution& sol, double t, Interval x_range, int n);

/// n points of t^2 - x^2 = R^2, t > 0, with psi spread over [-psi_max, psi_max].
std::vector<DoubleNumber> hyperbolic_circle_samples(double R, int n, double psi_max = 2.0);

struct VerifyReport {
  double boundary_max_dev = 0.0;
  double interior_max_box_residual = 0.0;
  int interior_points = 0;
  bool pass = false;
};

/// Probe grid: t in [1.2, 3], |x| <= 0.8 t, probes_t x probes_x points.
std::vector<DoubleNumber> default_probe_grid(int probes_t = 19, int probes_x = 17);

/// Boundary deviation |phi - phi0| over the samples and the largest
/// box residual of phi over the probes; passes iff both are <= tol.
VerifyReport verify_solution(const WaveSolution& sol, const std::vector<DoubleNumber>& boundary_samples, double tol,
                             const StencilSpec& s, const std::vector<DoubleNumber>& probes = default_probe_grid());

}  // namespace splitplane
