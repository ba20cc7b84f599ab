#pragma once

#include <vector>

#include "ebi/types.hpp"

namespace ebi {

enum class CurveKind { circle, ellipse, kite };

/// Smooth closed parametrized curve t in [0, 2pi):
///   position(t) = center + scale * shape(t)
/// where shape is the unit-size template of the given kind. The kite template
/// is (cos t + 0.65 cos 2t - 0.65, 1.5 sin t).
struct Curve {
  CurveKind kind = CurveKind::circle;
  double a = 1.0;  // circle radius / ellipse semi-axis
  double b = 1.0;  // ellipse semi-axis
  Vec2 center = Vec2::Zero();
  double scale = 1.0;

  Vec2 position(double t) const;
  Vec2 d1(double t) const;  // dx/dt
  Vec2 d2(double t) const;  // d2x/dt2

  /// Largest distance from center to the curve.
  double radius_bound() const;
};

Curve make_circle(double r, Vec2 center = Vec2::Zero());
Curve make_ellipse(double a, double b, Vec2 center = Vec2::Zero());
Curve make_kite(Vec2 center = Vec2::Zero(), double scale = 1.0);

/// Placement of a reference domain B as z0 + eps * B.
struct InclusionPlacement {
  Curve reference;
  Vec2 z0 = Vec2::Zero();
  double epsilon = 1.0;
};

Curve place(const InclusionPlacement& p);

/// Trapezoid-rule discretization of a curve: N uniform parameter nodes with
/// positions, outward unit normals, Jacobians |x'(t)| and weights 2pi/N * |x'|.
struct BoundaryGrid {
  Curve curve;
  int n = 0;
  std::vector<double> t;
  std::vector<Vec2> x;
  std::vector<Vec2> xp;       // x'(t)
  std::vector<Vec2> xpp;      // x''(t)
  std::vector<Vec2> tangent;  // unit
  std::vector<Vec2> normal;   // unit, outward
  std::vector<double> jac;
  std::vector<double> w;

  double spacing_bound() const;  // max arclength step
  double perimeter() const;
};

BoundaryGrid sample_grid(const Curve& c, int n);

/// Minimum node-to-node distance between two grids.
double min_distance(const BoundaryGrid& g1, const BoundaryGrid& g2);

/// Throws unless all grids are pairwise disjoint (sampled check).
void require_disjoint(const std::vector<BoundaryGrid>& grids);

}  // namespace ebi
