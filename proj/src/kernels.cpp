#include "ebi/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace ebi {

namespace {

void require_nonzero(double r2) {
  if (!(r2 > 0.0)) throw std::domain_error("kelvin kernel: singular evaluation at x = 0");
}

}  // namespace

Mat2 kelvin_matrix(const LameParams& p, const Vec2& x) {
  const double r2 = x.squaredNorm();
  require_nonzero(r2);
  const double c1 = p.alpha() / kTwoPi;
  const double c2 = -p.beta() / kTwoPi;
  const double lg = c1 * 0.5 * std::log(r2);
  const double q = c2 / r2;
  const double offdiag = q * (x.x() * x.y());
  Mat2 g;
  g(0, 0) = lg + q * (x.x() * x.x());
  g(1, 1) = lg + q * (x.y() * x.y());
  g(0, 1) = offdiag;
  g(1, 0) = offdiag;
  return g;
}

Mat3 kelvin_matrix3(const LameParams& p, const Vec3& x) {
  const double r = x.norm();
  require_nonzero(r);
  const double q = -p.beta() / kTwoPi / (r * r * r);
  const double dg = -p.alpha() / (4.0 * kPi * r);
  Mat3 g;
  for (int i = 0; i < 3; ++i) {
    g(i, i) = dg + q * (x[i] * x[i]);
    for (int j = i + 1; j < 3; ++j) {
      const double v = q * (x[i] * x[j]);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

// Both dimensions share the structure G_ij = c1 d_ij g(r) + c2 x_i x_j f(r);
// derivatives below are the chain-rule expansion in terms of g', g'', f, f', f''.
namespace {

struct RadialParts {
  double c1, c2, gp, gpp, f, fp, fpp;  // gp = g'(r)/? -- stored as plain derivatives
};

RadialParts radial2(const LameParams& p, double r) {
  RadialParts q;
  q.c1 = p.alpha() / kTwoPi;
  q.c2 = -p.beta() / kTwoPi;
  q.gp = 1.0 / r;
  q.gpp = -1.0 / (r * r);
  q.f = 1.0 / (r * r);
  q.fp = -2.0 / (r * r * r);
  q.fpp = 6.0 / (r * r * r * r);
  return q;
}

RadialParts radial3(const LameParams& p, double r) {
  RadialParts q;
  q.c1 = p.alpha() / (4.0 * kPi);
  q.c2 = -p.beta() / kTwoPi;
  q.gp = 1.0 / (r * r);            // g = -1/r
  q.gpp = -2.0 / (r * r * r);
  q.f = 1.0 / (r * r * r);
  q.fp = -3.0 / (r * r * r * r);
  q.fpp = 12.0 / (r * r * r * r * r);
  return q;
}

template <int D, class Mat, class Vec>
std::array<Mat, D> gradient_impl(const RadialParts& q, const Vec& x, double r) {
  std::array<Mat, D> out;
  for (int k = 0; k < D; ++k) {
    Mat m = Mat::Zero();
    for (int i = 0; i < D; ++i) {
      for (int j = 0; j < D; ++j) {
        double v = 0.0;
        if (i == j) v += q.c1 * q.gp * x[k] / r;
        double quad = 0.0;
        if (i == k) quad += x[j];
        if (j == k) quad += x[i];
        v += q.c2 * (quad * q.f + x[i] * x[j] * q.fp * x[k] / r);
        m(i, j) = v;
      }
    }
    out[k] = m;
  }
  return out;
}

}  // namespace

std::array<Mat2, 2> kelvin_gradient(const LameParams& p, const Vec2& x) {
  const double r = x.norm();
  require_nonzero(r);
  return gradient_impl<2, Mat2>(radial2(p, r), x, r);
}

std::array<Mat3, 3> kelvin_gradient3(const LameParams& p, const Vec3& x) {
  const double r = x.norm();
  require_nonzero(r);
  return gradient_impl<3, Mat3>(radial3(p, r), x, r);
}

std::array<std::array<Mat2, 2>, 2> kelvin_hessian(const LameParams& p, const Vec2& x) {
  const double r = x.norm();
  require_nonzero(r);
  const RadialParts q = radial2(p, r);
  std::array<std::array<Mat2, 2>, 2> out;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      Mat2 m = Mat2::Zero();
      const double dkl = (k == l) ? 1.0 : 0.0;
      const double xkl = x[k] * x[l];
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          double v = 0.0;
          if (i == j) v += q.c1 * (q.gpp * xkl / (r * r) + q.gp * (dkl / r - xkl / (r * r * r)));
          double sym = 0.0;
          if (i == k && j == l) sym += 1.0;
          if (j == k && i == l) sym += 1.0;
          v += q.c2 * sym * q.f;
          double lin = 0.0;
          if (i == k) lin += x[j] * x[l];
          if (j == k) lin += x[i] * x[l];
          if (i == l) lin += x[j] * x[k];
          if (j == l) lin += x[i] * x[k];
          v += q.c2 * lin * q.fp / r;
          v += q.c2 * x[i] * x[j] * (q.fpp * xkl / (r * r) + q.fp * (dkl / r - xkl / (r * r * r)));
          m(i, j) = v;
        }
      }
      out[k][l] = m;
    }
  }
  return out;
}

Mat2 kelvin_derivative(const LameParams& p, const Vec2& x, int ax, int ay) {
  const int order = ax + ay;
  if (ax < 0 || ay < 0 || order < 1 || order > 2) {
    throw std::invalid_argument("kelvin_derivative: supported orders are 1 and 2");
  }
  if (order == 1) {
    return kelvin_gradient(p, x)[ax == 1 ? 0 : 1];
  }
  const auto h = kelvin_hessian(p, x);
  if (ax == 2) return h[0][0];
  if (ay == 2) return h[1][1];
  return h[0][1];
}

Mat2 traction_kernel(const LameParams& p, const Vec2& x, const Vec2& n) {
  if (std::abs(n.squaredNorm() - 1.0) > 1e-10) {
    throw std::invalid_argument("traction_kernel: normal must be a unit vector");
  }
  const auto g = kelvin_gradient(p, x);
  Mat2 out;
  for (int j = 0; j < 2; ++j) {
    const double div = g[0](0, j) + g[1](1, j);
    for (int i = 0; i < 2; ++i) {
      double v = p.lambda * div * n[i];
      for (int k = 0; k < 2; ++k) v += p.mu * (g[k](i, j) + g[i](k, j)) * n[k];
      out(i, j) = v;
    }
  }
  return out;
}

std::array<Mat2, 2> traction_kernel_gradient(const LameParams& p, const Vec2& x, const Vec2& n) {
  const auto h = kelvin_hessian(p, x);
  std::array<Mat2, 2> out;
  for (int d = 0; d < 2; ++d) {
    Mat2 m;
    for (int j = 0; j < 2; ++j) {
      const double div = h[d][0](0, j) + h[d][1](1, j);
      for (int i = 0; i < 2; ++i) {
        double v = p.lambda * div * n[i];
        for (int k = 0; k < 2; ++k) v += p.mu * (h[d][k](i, j) + h[d][i](k, j)) * n[k];
        m(i, j) = v;
      }
    }
    out[d] = m;
  }
  return out;
}

Mat2 double_layer_kernel(const LameParams& p, const Vec2& x, const Vec2& y, const Vec2& ny) {
  return -traction_kernel(p, x - y, ny);
}

Vec2 RigidBasis::value(int l, const Vec2& x) const {
  switch (l) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-(x.y() - origin.y()), x.x() - origin.x()};
  }
  throw std::out_of_range("RigidBasis: index");
}

Mat2 RigidBasis::gradient(int l) const {
  Mat2 g = Mat2::Zero();
  if (l == 2) {
    g(0, 1) = -1.0;
    g(1, 0) = 1.0;
  } else if (l < 0 || l > 2) {
    throw std::out_of_range("RigidBasis: index");
  }
  return g;
}

RigidBasis rigid_basis(int dim, Vec2 origin) {
  if (dim != 2) throw std::invalid_argument("rigid_basis: only dim = 2 is supported");
  return RigidBasis{origin};
}

}  // namespace ebi
