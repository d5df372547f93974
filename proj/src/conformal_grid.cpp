#include "splitplane/conformal_grid.hpp"

#include <cmath>
#include <optional>

namespace splitplane {

void GridSpec::validate() const {
  if (n_t < 1 || n_x < 1 || samples_per_line < 2) {
    throw Error(ErrorKind::Domain, "grid needs n_t, n_x >= 1 and samples_per_line >= 2");
  }
  if (kind == Kind::Polar && !(t_range.lo > 0.0 && t_range.hi > 0.0)) {
    throw Error(ErrorKind::Domain, "polar grid needs a positive rho range");
  }
}

namespace {

struct GridLine {
  int id;
  bool first_fixed;  // t (or rho) held fixed
  double fixed;
  Interval span;
};

double lerp(const Interval& r, int i, int n) { return n == 1 ? r.lo : r.lo + (r.hi - r.lo) * i / (n - 1); }

std::vector<GridLine> lines_of(const GridSpec& g) {
  std::vector<GridLine> out;
  for (int i = 0; i < g.n_t; ++i) out.push_back({i, true, lerp(g.t_range, i, g.n_t), g.x_range});
  for (int k = 0; k < g.n_x; ++k) out.push_back({g.n_t + k, false, lerp(g.x_range, k, g.n_x), g.t_range});
  return out;
}

DoubleNumber line_point(const GridSpec& g, const GridLine& l, double s) {
  const double a = l.first_fixed ? l.fixed : s;
  const double b = l.first_fixed ? s : l.fixed;
  if (g.kind == GridSpec::Kind::Cartesian) return DoubleNumber(a, b);
  return from_polar(PolarForm<double>(g.sign, a, b));
}

std::optional<DoubleNumber> try_map(const DoubleMap& f, const DoubleNumber& h) {
  try {
    return f(h);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Bisection towards the edge of the domain between a valid and an invalid parameter.
std::optional<DoubleNumber> edge_point(const DoubleMap& f, const GridSpec& g, const GridLine& l, double valid,
                                       double invalid) {
  std::optional<DoubleNumber> best;
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (valid + invalid);
    if (auto w = try_map(f, line_point(g, l, mid))) {
      valid = mid;
      best = w;
    } else {
      invalid = mid;
    }
  }
  return best;
}

}  // namespace

std::vector<Polyline> map_grid(const DoubleMap& f, const GridSpec& g) {
  g.validate();
  std::vector<Polyline> out;
  for (const GridLine& l : lines_of(g)) {
    Polyline p;
    p.source_line = l.id;
    const int n = g.samples_per_line;
    std::vector<double> s(n);
    std::vector<std::optional<DoubleNumber>> w(n);
    for (int k = 0; k < n; ++k) {
      s[k] = lerp(l.span, k, n);
      w[k] = try_map(f, line_point(g, l, s[k]));
    }
    bool in_run = false;
    for (int k = 0; k < n; ++k) {
      if (w[k]) {
        if (!in_run) {
          if (!p.points.empty()) p.breaks.push_back(p.points.size());
          if (k > 0) {
            if (auto e = edge_point(f, g, l, s[k], s[k - 1])) p.points.push_back(*e);
          }
          in_run = true;
        }
        p.points.push_back(*w[k]);
      } else if (in_run) {
        if (auto e = edge_point(f, g, l, s[k - 1], s[k])) p.points.push_back(*e);
        in_run = false;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Polyline> grid_lines(const GridSpec& g) {
  g.validate();
  std::vector<Polyline> out;
  for (const GridLine& l : lines_of(g)) {
    Polyline p;
    p.source_line = l.id;
    for (int k = 0; k < g.samples_per_line; ++k) p.points.push_back(line_point(g, l, lerp(l.span, k, g.samples_per_line)));
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

bool timelike(Region r) { return r == Region::QuadrantI || r == Region::QuadrantIII; }

}  // namespace

double hyperbolic_angle(const DoubleNumber& u, const DoubleNumber& v) {
  const Region ru = classify(u), rv = classify(v);
  if (!is_quadrant(ru) || !is_quadrant(rv)) throw Error(ErrorKind::Cone, "direction on a cone has no angle");
  if (timelike(ru) != timelike(rv)) {
    throw Error(ErrorKind::MixedSector, "directions lie in sectors of different type");
  }
  return to_polar(v).psi() - to_polar(u).psi();
}

double angle_preservation_check(const DoubleMap& f, const DoubleNumber& h, const DoubleNumber& u,
                                const DoubleNumber& v, const StencilSpec& s) {
  const DoubleNumber d = derivative(f, h, s);
  const DoubleNumber fh = f(h);
  const double scale = std::max(1.0, fh.t() * fh.t() + fh.x() * fh.x());
  if (std::abs(norm_sq(d)) < 1e-10 * scale) {
    throw Error(ErrorKind::BrokenConformality, "conformal factor vanishes at h");
  }
  return std::abs(hyperbolic_angle(d * u, d * v) - hyperbolic_angle(u, v));
}

double local_length_ratio(const DoubleMap& f, const DoubleNumber& h, const DoubleNumber& dir, double len) {
  const DoubleNumber half = dir * (0.5 * len);
  const double original = modulus(dir * len);
  if (original == 0.0) throw Error(ErrorKind::Cone, "null direction has zero length");
  return modulus(f(h + half) - f(h - half)) / original;
}

double local_area_ratio(const DoubleMap& f, const DoubleNumber& h, double side) {
  constexpr int kPerSide = 8;
  const double r = 0.5 * side;
  const DoubleNumber corners[4] = {h + DoubleNumber(-r, -r), h + DoubleNumber(r, -r), h + DoubleNumber(r, r),
                                   h + DoubleNumber(-r, r)};
  std::vector<DoubleNumber> ring;
  for (int c = 0; c < 4; ++c) {
    const DoubleNumber a = corners[c], b = corners[(c + 1) % 4];
    for (int k = 0; k < kPerSide; ++k) ring.push_back(f(a + (b - a) * (static_cast<double>(k) / kPerSide)));
  }
  // Shoelace about the image of h keeps the products small.
  const DoubleNumber o = f(h);
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const DoubleNumber p = ring[i] - o, q = ring[(i + 1) % ring.size()] - o;
    twice += p.t() * q.x() - p.x() * q.t();
  }
  return std::abs(0.5 * twice) / (side * side);
}

}  // namespace splitplane
