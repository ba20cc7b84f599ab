// Scratch diagnostic: traction of S[phi] along the normal at one node.
#include <cmath>
#include <cstdio>
#include <vector>

#include "ebi/fields.hpp"
#include "ebi/potentials.hpp"

using namespace ebi;

int main() {
  const LameParams p = new_lame_params(1.3, 0.8, 2);
  for (bool circle : {true, false}) {
    const Curve c = circle ? make_circle(1.0) : make_ellipse(1.0, 0.6);
    const BoundaryGrid g = sample_grid(c, 256);
    const BoundaryGrid fine = sample_grid(c, 2048);
    auto dens = [](const BoundaryGrid& gr) {
      Density d = Density::zero(gr.n);
      for (int m = 0; m < gr.n; ++m) d.set(m, Vec2{std::cos(gr.t[m]), std::sin(2 * gr.t[m])});
      return d;
    };
    const Density phi = dens(g), phif = dens(fine);
    const DenseOperator k = assemble_kstar(p, g);
    const Density text = conormal_trace(k, phi, TraceSide::exterior);
    const Density tint = conormal_trace(k, phi, TraceSide::interior);
    auto value = [&](const Vec2& y) {
      Vec2 v = Vec2::Zero();
      for (int j = 0; j < fine.n; ++j)
        v += fine.w[j] * (kelvin_matrix(p, y - fine.x[j]) * phif.at(j));
      return v;
    };
    const int m = 0;
    std::printf("%s node m=%d x=(%.3f,%.3f) n=(%.3f,%.3f) phi=(%.3f,%.3f)\n",
                circle ? "CIRCLE" : "ELLIPSE", m, g.x[m].x(), g.x[m].y(), g.normal[m].x(),
                g.normal[m].y(), phi.at(m).x(), phi.at(m).y());
    std::printf("  op_ext=(% .8f,% .8f) op_int=(% .8f,% .8f) diff=(%.2e,%.2e)\n", text.at(m).x(),
                text.at(m).y(), tint.at(m).x(), tint.at(m).y(),
                text.at(m).x() - tint.at(m).x() - phi.at(m).x(),
                text.at(m).y() - tint.at(m).y() - phi.at(m).y());
    for (double d : {0.4, 0.3, 0.2, 0.15, 0.1, 0.07, 0.05, 0.03, 0.02}) {
      Vec2 tr[2];
      for (int side = 0; side < 2; ++side) {
        const double sgn = side == 0 ? 1.0 : -1.0;
        const Vec2 q = g.x[m] + sgn * d * g.normal[m];
        const double h = 1e-5;
        Mat2 grad;
        grad.col(0) = (value(q + Vec2{h, 0}) - value(q - Vec2{h, 0})) / (2 * h);
        grad.col(1) = (value(q + Vec2{0, h}) - value(q - Vec2{0, h})) / (2 * h);
        const Mat2 strain = 0.5 * (grad + grad.transpose());
        tr[side] = apply_elasticity_tensor(p, strain) * g.normal[m];
      }
      std::printf("  d=%.3f  ext=(% .8f,% .8f)  int=(% .8f,% .8f)\n", d, tr[0].x(), tr[0].y(),
                  tr[1].x(), tr[1].y());
    }
  }
  return 0;
}
