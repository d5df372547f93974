#pragma once

#include <cstddef>
#include <vector>

#include "splitplane/holomorphy.hpp"

namespace splitplane {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Cartesian grids use (t, x) ranges. Polar grids use t_range as the rho
/// range and x_range as the psi range inside the quadrant of `sign`.
struct GridSpec {
  enum class Kind { Cartesian, Polar };

  Interval t_range;
  Interval x_range;
  int n_t = 11;
  int n_x = 11;
  int samples_per_line = 200;
  Kind kind = Kind::Cartesian;
  SignFactor sign = SignFactor::One;

  void validate() const;
};

struct Polyline {
  std::vector<DoubleNumber> points;
  int source_line = 0;
  /// Index i means points[i - 1] and points[i] belong to different runs.
  std::vector<std::size_t> breaks;
};

/// Lines 0..n_t-1 hold the first coordinate fixed (t or rho), lines n_t..
/// hold the second fixed (x or psi). Samples where F fails are dropped and
/// recorded as breaks; the edge of each valid run is refined by bisection.
std::vector<Polyline> map_grid(const DoubleMap& f, const GridSpec& g);

/// The grid lines themselves (map_grid of the identity without densification).
std::vector<Polyline> grid_lines(const GridSpec& g);

/// psi(v) - psi(u). ConeError for cone directions, MixedSectorError when u
/// and v are not both timelike (quadrants I, III) or both spacelike (II, IV).
double hyperbolic_angle(const DoubleNumber& u, const DoubleNumber& v);

/// |angle(F'(h) u, F'(h) v) - angle(u, v)|; BrokenConformality when
/// |conformal_factor| < 1e-10 max(1, |F(h)|^2).
double angle_preservation_check(const DoubleMap& f, const DoubleNumber& h, const DoubleNumber& u,
                                const DoubleNumber& v, const StencilSpec& s);

/// Pseudo-Euclidean length of F applied to the segment of length `len`
/// centred at h along `dir`, divided by the original length.
double local_length_ratio(const DoubleMap& f, const DoubleNumber& h, const DoubleNumber& dir, double len = 1e-4);

/// Euclidean area of the image of the axis-aligned square of side `side`
/// centred at h, divided by side^2.
double local_area_ratio(const DoubleMap& f, const DoubleNumber& h, double side = 1e-4);

}  // namespace splitplane
