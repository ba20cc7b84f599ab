#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "ebi/material.hpp"
#include "ebi/potentials.hpp"

namespace ebi::testing {

inline ContrastPair pair2(double l0, double m0, double l1, double m1) {
  return ContrastPair{new_lame_params(l0, m0, 2), new_lame_params(l1, m1, 2)};
}

inline Density trig_density(const BoundaryGrid& g) {
  Density d = Density::zero(g.n);
  for (int m = 0; m < g.n; ++m) d.set(m, Vec2{std::cos(g.t[m]), std::sin(2.0 * g.t[m])});
  return d;
}

inline Density restrict4(const Density& fine, int n_coarse) {
  Density d = Density::zero(n_coarse);
  for (int m = 0; m < n_coarse; ++m) d.set(m, fine.at(4 * m));
  return d;
}

inline double sup_norm(const Density& d) {
  double s = 0.0;
  for (int m = 0; m < d.nodes(); ++m) s = std::max(s, d.at(m).norm());
  return s;
}

/// Neville tableau evaluated at zero for samples (delta_i, f_i).
inline Vec2 extrapolate_to_zero(const std::vector<double>& delta, std::vector<Vec2> f) {
  const int n = static_cast<int>(delta.size());
  for (int level = 1; level < n; ++level) {
    for (int i = 0; i + level < n; ++i) {
      f[i] = (delta[i + level] * f[i] - delta[i] * f[i + 1]) / (delta[i + level] - delta[i]);
    }
  }
  return f[0];
}

/// Trigonometric interpolation of a nodal density onto a finer uniform grid.
inline Density resample_density(const Density& d, const BoundaryGrid& fine) {
  const int n = d.nodes();
  Density out = Density::zero(fine.n);
  for (int comp = 0; comp < 2; ++comp) {
    std::vector<std::complex<double>> hat(n);
    for (int k = -n / 2; k < n / 2; ++k) {
      std::complex<double> c{0.0, 0.0};
      for (int m = 0; m < n; ++m) {
        c += d.v[2 * m + comp] * std::polar(1.0, -k * (kTwoPi * m / n));
      }
      hat[k + n / 2] = c / double(n);
    }
    for (int m = 0; m < fine.n; ++m) {
      std::complex<double> v{0.0, 0.0};
      for (int k = -n / 2; k < n / 2; ++k) {
        v += hat[k + n / 2] * std::polar(1.0, k * fine.t[m]);
      }
      out.v[2 * m + comp] = v.real();
    }
  }
  return out;
}

}  // namespace ebi::testing
