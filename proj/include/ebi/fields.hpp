#pragma once

#include <array>
#include <memory>
#include <vector>

#include "ebi/geometry.hpp"
#include "ebi/kernels.hpp"
#include "ebi/material.hpp"
#include "ebi/potentials.hpp"

namespace ebi {

/// Background displacement field h with analytic gradient. Conormal data on a
/// grid is derived from the gradient via the background elasticity tensor.
class BackgroundField {
 public:
  virtual ~BackgroundField() = default;
  virtual Vec2 value(const Vec2& x) const = 0;
  virtual Mat2 gradient(const Vec2& x) const = 0;  // (i,j) = d_j h_i

  Vec2 traction(const LameParams& bg, const Vec2& x, const Vec2& n) const;
  Density values_on(const BoundaryGrid& g) const;
  Density traction_on(const LameParams& bg, const BoundaryGrid& g) const;
};

class RigidField : public BackgroundField {
 public:
  RigidField(int index, Vec2 origin = Vec2::Zero()) : basis_{origin}, l_(index) {}
  Vec2 value(const Vec2& x) const override { return basis_.value(l_, x); }
  Mat2 gradient(const Vec2&) const override { return basis_.gradient(l_); }

 private:
  RigidBasis basis_;
  int l_;
};

/// h(x) = A x; any A is an admissible background solution.
class LinearField : public BackgroundField {
 public:
  explicit LinearField(const Mat2& a) : a_(a) {}
  Vec2 value(const Vec2& x) const override { return a_ * x; }
  Mat2 gradient(const Vec2&) const override { return a_; }

 private:
  Mat2 a_;
};

/// Uniform shear (x2, x1).
std::shared_ptr<const BackgroundField> shear_field();

/// Monomial source x^a e_j used by the moment-tensor definition; |a| in {1,2}.
/// Individual quadratic monomials need not solve the background equation.
class MonomialField : public BackgroundField {
 public:
  MonomialField(std::array<int, 2> alpha, int j);
  Vec2 value(const Vec2& x) const override;
  Mat2 gradient(const Vec2& x) const override;
  std::array<int, 2> alpha() const { return alpha_; }
  int direction() const { return j_; }

 private:
  std::array<int, 2> alpha_;
  int j_;
};

std::shared_ptr<const BackgroundField> polynomial_source(std::array<int, 2> alpha, int j);

/// General vector polynomial of total degree <= 2:
/// h_j(x) = sum_a coeff[j][a] x^a. Used for Taylor blocks of true solutions.
class QuadraticField : public BackgroundField {
 public:
  // coefficient order per component: 1, x1, x2, x1^2, x1 x2, x2^2
  QuadraticField(const std::array<std::array<double, 6>, 2>& c) : c_(c) {}
  Vec2 value(const Vec2& x) const override;
  Mat2 gradient(const Vec2& x) const override;

 private:
  std::array<std::array<double, 6>, 2> c_;
};

/// Residual of the background equation at x by central finite differences.
Vec2 fd_pde_residual(const BackgroundField& h, const LameParams& bg, const Vec2& x,
                     double step = 1e-5);

/// Second derivative d^a h_i (|a| = 2) by finite differences of the analytic
/// gradient with Richardson extrapolation; test/diagnostic use.
Vec2 fd_second_derivative(const BackgroundField& h, const Vec2& x, int ax, int ay,
                          double step = 1e-4);

/// Field induced by boundary data on an outer boundary: the single-layer part
/// carries the (negated) Neumann data, the double-layer part the trace.
class LayerInducedField : public BackgroundField {
 public:
  LayerInducedField(LameParams bg, BoundaryGrid outer, Density trace, Density neumann);
  Vec2 value(const Vec2& x) const override;
  Mat2 gradient(const Vec2& x) const override;
  const BoundaryGrid& boundary() const { return outer_; }

 private:
  LameParams bg_;
  BoundaryGrid outer_;
  Density trace_;
  Density neumann_;
};

}  // namespace ebi
