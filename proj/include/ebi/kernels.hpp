#pragma once

#include <array>
#include <vector>

#include "ebi/material.hpp"
#include "ebi/types.hpp"

namespace ebi {

/// Kelvin matrix of the Lame operator at x != 0.
/// d=2: G_ij = (alpha/2pi) d_ij ln|x| - (beta/2pi) x_i x_j / |x|^2.
Mat2 kelvin_matrix(const LameParams& p, const Vec2& x);
Mat3 kelvin_matrix3(const LameParams& p, const Vec3& x);

/// grad[k](i,j) = d_k G_ij.
std::array<Mat2, 2> kelvin_gradient(const LameParams& p, const Vec2& x);
std::array<Mat3, 3> kelvin_gradient3(const LameParams& p, const Vec3& x);

/// hess[k][l](i,j) = d_k d_l G_ij.
std::array<std::array<Mat2, 2>, 2> kelvin_hessian(const LameParams& p, const Vec2& x);

/// Flattened derivative-tensor access per the supported orders (1 or 2);
/// order 3 is rejected. Multi-index derivative d^a G with |a| = order.
Mat2 kelvin_derivative(const LameParams& p, const Vec2& x, int ax, int ay);

/// Traction (conormal-derivative) kernel: column j equals
///   lambda (div G_.j) n + mu (grad G_.j + grad G_.j^T) n,  |n| = 1.
Mat2 traction_kernel(const LameParams& p, const Vec2& x, const Vec2& n);

/// d_k of traction_kernel in the x argument.
std::array<Mat2, 2> traction_kernel_gradient(const LameParams& p, const Vec2& x, const Vec2& n);

/// Kernel of the double layer potential: the conormal derivative of
/// G(x - y) taken in the y variable with normal n_y, i.e. -T(x - y; n_y).
Mat2 double_layer_kernel(const LameParams& p, const Vec2& x, const Vec2& y, const Vec2& ny);

/// Basis of the rigid motions: translations plus the rotation (-x2, x1).
struct RigidBasis {
  Vec2 origin = Vec2::Zero();
  int size() const { return 3; }
  Vec2 value(int l, const Vec2& x) const;
  Mat2 gradient(int l) const;
};

RigidBasis rigid_basis(int dim, Vec2 origin = Vec2::Zero());

}  // namespace ebi
