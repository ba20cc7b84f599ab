#include "ebi/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ebi {

namespace {

Vec2 shape(CurveKind k, double a, double b, double t) {
  switch (k) {
    case CurveKind::circle:
      return {a * std::cos(t), a * std::sin(t)};
    case CurveKind::ellipse:
      return {a * std::cos(t), b * std::sin(t)};
    case CurveKind::kite:
      return {std::cos(t) + 0.65 * std::cos(2.0 * t) - 0.65, 1.5 * std::sin(t)};
  }
  return Vec2::Zero();
}

Vec2 shape_d1(CurveKind k, double a, double b, double t) {
  switch (k) {
    case CurveKind::circle:
      return {-a * std::sin(t), a * std::cos(t)};
    case CurveKind::ellipse:
      return {-a * std::sin(t), b * std::cos(t)};
    case CurveKind::kite:
      return {-std::sin(t) - 1.3 * std::sin(2.0 * t), 1.5 * std::cos(t)};
  }
  return Vec2::Zero();
}

Vec2 shape_d2(CurveKind k, double a, double b, double t) {
  switch (k) {
    case CurveKind::circle:
      return {-a * std::cos(t), -a * std::sin(t)};
    case CurveKind::ellipse:
      return {-a * std::cos(t), -b * std::sin(t)};
    case CurveKind::kite:
      return {-std::cos(t) - 2.6 * std::cos(2.0 * t), -1.5 * std::sin(t)};
  }
  return Vec2::Zero();
}

}  // namespace

Vec2 Curve::position(double t) const { return center + scale * shape(kind, a, b, t); }
Vec2 Curve::d1(double t) const { return scale * shape_d1(kind, a, b, t); }
Vec2 Curve::d2(double t) const { return scale * shape_d2(kind, a, b, t); }

double Curve::radius_bound() const {
  double r = 0.0;
  for (int i = 0; i < 512; ++i) {
    r = std::max(r, (position(kTwoPi * i / 512.0) - center).norm());
  }
  return r;
}

Curve make_circle(double r, Vec2 center) {
  if (!(r > 0.0)) throw std::invalid_argument("circle: radius must be positive");
  return Curve{CurveKind::circle, r, r, center, 1.0};
}

Curve make_ellipse(double a, double b, Vec2 center) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("ellipse: semi-axes must be positive");
  return Curve{CurveKind::ellipse, a, b, center, 1.0};
}

Curve make_kite(Vec2 center, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("kite: scale must be positive");
  return Curve{CurveKind::kite, 1.0, 1.0, center, scale};
}

Curve place(const InclusionPlacement& p) {
  if (!(p.epsilon > 0.0)) throw std::invalid_argument("place: epsilon must be positive");
  Curve c = p.reference;
  c.center = p.z0 + p.epsilon * p.reference.center;
  c.scale = p.epsilon * p.reference.scale;
  return c;
}

BoundaryGrid sample_grid(const Curve& c, int n) {
  if (n < 16 || n % 2 != 0) {
    throw std::invalid_argument("sample_grid: need even n >= 16, got " + std::to_string(n));
  }
  BoundaryGrid g;
  g.curve = c;
  g.n = n;
  g.t.resize(n);
  g.x.resize(n);
  g.xp.resize(n);
  g.xpp.resize(n);
  g.tangent.resize(n);
  g.normal.resize(n);
  g.jac.resize(n);
  g.w.resize(n);
  const double h = kTwoPi / n;
  for (int m = 0; m < n; ++m) {
    const double t = h * m;
    g.t[m] = t;
    g.x[m] = c.position(t);
    g.xp[m] = c.d1(t);
    g.xpp[m] = c.d2(t);
    const double j = g.xp[m].norm();
    if (!(j > 0.0)) throw std::invalid_argument("sample_grid: degenerate parametrization");
    g.jac[m] = j;
    g.tangent[m] = g.xp[m] / j;
    g.normal[m] = Vec2{g.tangent[m].y(), -g.tangent[m].x()};
    g.w[m] = h * j;
  }
  return g;
}

double BoundaryGrid::spacing_bound() const {
  double m = 0.0;
  for (double j : jac) m = std::max(m, j);
  return kTwoPi / n * m;
}

double BoundaryGrid::perimeter() const {
  double s = 0.0;
  for (double wi : w) s += wi;
  return s;
}

double min_distance(const BoundaryGrid& g1, const BoundaryGrid& g2) {
  double d = std::numeric_limits<double>::infinity();
  for (const Vec2& p : g1.x)
    for (const Vec2& q : g2.x) d = std::min(d, (p - q).norm());
  return d;
}

void require_disjoint(const std::vector<BoundaryGrid>& grids) {
  for (std::size_t i = 0; i < grids.size(); ++i) {
    for (std::size_t j = i + 1; j < grids.size(); ++j) {
      const double gap = std::max(grids[i].spacing_bound(), grids[j].spacing_bound());
      if (min_distance(grids[i], grids[j]) <= gap) {
        throw std::invalid_argument("inclusion boundaries are not disjoint (components " +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace ebi
