// Scratch diagnostic: energy truncation and far-field decay configurations.
#include <cmath>
#include <cstdio>

#include "ebi/freespace.hpp"

using namespace ebi;

int main() {
  const BoundaryGrid g = sample_grid(make_circle(1.0), 128);
  const ContrastPair pair{new_lame_params(1.0, 1.0, 2), new_lame_params(2.0, 3.0, 2)};
  const auto sol = solve_transmission(pair, {g}, shear_field());
  for (double r : {4.0, 8.0, 16.0, 32.0, 64.0}) {
    std::printf("J(%5.1f) = %.12f\n", r, energy_J(sol, r));
  }
  for (auto [l1, m1] : {std::pair{2.0, 3.0}, {3.0, 0.5}, {0.5, 0.3}, {2.0, 10.0}}) {
    const ContrastPair pr{new_lame_params(1.0, 1.0, 2), new_lame_params(l1, m1, 2)};
    const auto s = solve_transmission(pr, {g}, shear_field());
    double at5 = 0.0, at50 = 0.0;
    for (int dir = 0; dir < 8; ++dir) {
      const double th = kTwoPi * dir / 8.0;
      const Vec2 u{std::cos(th), std::sin(th)};
      auto sc = [&](double r) {
        const Vec2 x = r * u;
        return (eval_solution(s, x).value - s.h->value(x)).norm();
      };
      at5 = std::max(at5, sc(5.0));
      at50 = std::max(at50, sc(50.0));
    }
    std::printf("inc=(%.1f,%.1f): at5=%.6f at50=%.6f ratio=%.4f\n", l1, m1, at5, at50, at50 / at5);
  }
  {
    const ContrastPair pr{new_lame_params(1.0, 1.0, 2), new_lame_params(2.0, 3.0, 2)};
    const auto s = solve_transmission(pr, {g}, shear_field());
    for (int dir = 0; dir < 8; ++dir) {
      const double th = kTwoPi * dir / 16.0;
      const Vec2 u{std::cos(th), std::sin(th)};
      auto sc = [&](double r) {
        const Vec2 x = r * u;
        return (eval_solution(s, x).value - s.h->value(x)).norm();
      };
      std::printf("theta=%5.2f ratio=%.5f (at5=%.5f)\n", th, sc(50.0) / sc(5.0), sc(5.0));
    }
  }
  return 0;
}
// direction-resolved decay (appended main2 via static init hack avoided; edit instead)
