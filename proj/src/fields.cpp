#include "ebi/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace ebi {

Vec2 BackgroundField::traction(const LameParams& bg, const Vec2& x, const Vec2& n) const {
  const Mat2 g = gradient(x);
  const Mat2 strain = 0.5 * (g + g.transpose());
  return apply_elasticity_tensor(bg, strain) * n;
}

Density BackgroundField::values_on(const BoundaryGrid& g) const {
  Density d = Density::zero(g.n);
  for (int m = 0; m < g.n; ++m) d.set(m, value(g.x[m]));
  return d;
}

Density BackgroundField::traction_on(const LameParams& bg, const BoundaryGrid& g) const {
  Density d = Density::zero(g.n);
  for (int m = 0; m < g.n; ++m) d.set(m, traction(bg, g.x[m], g.normal[m]));
  return d;
}

std::shared_ptr<const BackgroundField> shear_field() {
  Mat2 a;
  a << 0.0, 1.0, 1.0, 0.0;
  return std::make_shared<LinearField>(a);
}

MonomialField::MonomialField(std::array<int, 2> alpha, int j) : alpha_(alpha), j_(j) {
  const int total = alpha[0] + alpha[1];
  if (alpha[0] < 0 || alpha[1] < 0 || total < 1 || total > 2) {
    throw std::invalid_argument("polynomial_source: |alpha| must be 1 or 2");
  }
  if (j != 0 && j != 1) throw std::invalid_argument("polynomial_source: direction must be 0 or 1");
}

namespace {
double int_pow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}
}  // namespace

Vec2 MonomialField::value(const Vec2& x) const {
  Vec2 v = Vec2::Zero();
  v[j_] = int_pow(x.x(), alpha_[0]) * int_pow(x.y(), alpha_[1]);
  return v;
}

Mat2 MonomialField::gradient(const Vec2& x) const {
  Mat2 g = Mat2::Zero();
  if (alpha_[0] > 0) {
    g(j_, 0) = alpha_[0] * int_pow(x.x(), alpha_[0] - 1) * int_pow(x.y(), alpha_[1]);
  }
  if (alpha_[1] > 0) {
    g(j_, 1) = alpha_[1] * int_pow(x.x(), alpha_[0]) * int_pow(x.y(), alpha_[1] - 1);
  }
  return g;
}

std::shared_ptr<const BackgroundField> polynomial_source(std::array<int, 2> alpha, int j) {
  return std::make_shared<MonomialField>(alpha, j);
}

Vec2 QuadraticField::value(const Vec2& x) const {
  Vec2 v;
  for (int j = 0; j < 2; ++j) {
    const auto& c = c_[j];
    v[j] = c[0] + c[1] * x.x() + c[2] * x.y() + c[3] * x.x() * x.x() + c[4] * x.x() * x.y() +
           c[5] * x.y() * x.y();
  }
  return v;
}

Mat2 QuadraticField::gradient(const Vec2& x) const {
  Mat2 g;
  for (int j = 0; j < 2; ++j) {
    const auto& c = c_[j];
    g(j, 0) = c[1] + 2.0 * c[3] * x.x() + c[4] * x.y();
    g(j, 1) = c[2] + c[4] * x.x() + 2.0 * c[5] * x.y();
  }
  return g;
}

Vec2 fd_pde_residual(const BackgroundField& h, const LameParams& bg, const Vec2& x, double step) {
  // div C grad^s h = mu lap h + (lambda + mu) grad div h, by second differences.
  auto val = [&](double dx, double dy) { return h.value(x + Vec2{dx, dy}); };
  const Vec2 hpp = val(step, 0), hmm = val(-step, 0), hqq = val(0, step), hww = val(0, -step);
  const Vec2 h0 = val(0, 0);
  const Vec2 lap = (hpp + hmm + hqq + hww - 4.0 * h0) / (step * step);
  const Vec2 gxy = (val(step, step) - val(step, -step) - val(-step, step) + val(-step, -step)) /
                   (4.0 * step * step);
  const Vec2 dxx = (hpp - 2.0 * h0 + hmm) / (step * step);
  const Vec2 dyy = (hqq - 2.0 * h0 + hww) / (step * step);
  Vec2 graddiv{dxx[0] + gxy[1], gxy[0] + dyy[1]};
  return bg.mu * lap + (bg.lambda + bg.mu) * graddiv;
}

Vec2 fd_second_derivative(const BackgroundField& h, const Vec2& x, int ax, int ay, double step) {
  if (ax + ay != 2 || ax < 0 || ay < 0) {
    throw std::invalid_argument("fd_second_derivative: |alpha| must be 2");
  }
  // One derivative comes from the analytic gradient, the other from a
  // fourth-order central difference of it.
  const int gcol = (ay >= 1) ? 1 : 0;
  const int dir = (ax >= 1) ? 0 : 1;
  auto col = [&](double s) {
    Vec2 q = x;
    q[dir] += s;
    return Vec2(h.gradient(q).col(gcol));
  };
  const Vec2 d = (8.0 * (col(step) - col(-step)) - (col(2.0 * step) - col(-2.0 * step))) /
                 (12.0 * step);
  return d;
}

LayerInducedField::LayerInducedField(LameParams bg, BoundaryGrid outer, Density trace,
                                     Density neumann)
    : bg_(bg), outer_(std::move(outer)), trace_(std::move(trace)), neumann_(std::move(neumann)) {
  if (trace_.nodes() != outer_.n || neumann_.nodes() != outer_.n) {
    throw std::invalid_argument("LayerInducedField: data/grid mismatch");
  }
}

Vec2 LayerInducedField::value(const Vec2& x) const {
  Vec2 v = Vec2::Zero();
  for (int m = 0; m < outer_.n; ++m) {
    v -= outer_.w[m] * (kelvin_matrix(bg_, x - outer_.x[m]) * neumann_.at(m));
    v += outer_.w[m] * (double_layer_kernel(bg_, x, outer_.x[m], outer_.normal[m]) * trace_.at(m));
  }
  return v;
}

Mat2 LayerInducedField::gradient(const Vec2& x) const {
  Mat2 g = Mat2::Zero();
  for (int m = 0; m < outer_.n; ++m) {
    const Vec2 z = x - outer_.x[m];
    const auto dk = kelvin_gradient(bg_, z);
    const auto dt = traction_kernel_gradient(bg_, z, outer_.normal[m]);
    for (int l = 0; l < 2; ++l) {
      g.col(l) -= outer_.w[m] * (dk[l] * neumann_.at(m));
      g.col(l) -= outer_.w[m] * (dt[l] * trace_.at(m));
    }
  }
  return g;
}

}  // namespace ebi
