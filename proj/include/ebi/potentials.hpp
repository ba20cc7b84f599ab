#pragma once

#include <vector>

#include "ebi/geometry.hpp"
#include "ebi/kernels.hpp"
#include "ebi/material.hpp"
#include "ebi/types.hpp"

namespace ebi {

/// Vector density sampled at grid nodes, stored interleaved:
/// v = (u1(t0), u2(t0), u1(t1), u2(t1), ...).
struct Density {
  VectorXd v;

  Density() = default;
  explicit Density(VectorXd values) : v(std::move(values)) {}
  static Density zero(int nodes) { return Density(VectorXd::Zero(2 * nodes)); }

  int nodes() const { return static_cast<int>(v.size()) / 2; }
  Vec2 at(int m) const { return {v[2 * m], v[2 * m + 1]}; }
  void set(int m, const Vec2& val) {
    v[2 * m] = val.x();
    v[2 * m + 1] = val.y();
  }
};

enum class OperatorKind { single_layer, kstar, traction_cross, block };

/// Assembled Nystrom matrix acting on interleaved nodal densities.
struct DenseOperator {
  MatrixXd a;
  OperatorKind kind = OperatorKind::block;
  int n_src = 0;
  int n_tgt = 0;

  Density apply(const Density& d) const { return Density(a * d.v); }
};

/// Quadrature weights R_k for the periodic logarithm ln(4 sin^2((t-s)/2)),
/// indexed by node offset (i - j) mod n. Exact on trigonometric polynomials.
std::vector<double> log_rule_weights(int n);

/// Weights g_k for the principal-value cotangent kernel cot((s-t)/2),
/// indexed by (i - j) mod n.
std::vector<double> hilbert_rule_weights(int n);

/// Self single-layer operator: log singularity split onto the spectral log
/// rule, smooth remainder on the trapezoid rule.
DenseOperator assemble_single_layer(const LameParams& p, const BoundaryGrid& g,
                                    Exec exec = Exec::parallel);

/// Cross single layer: values of S_src[phi] at the nodes of tgt.
DenseOperator assemble_single_layer(const LameParams& p, const BoundaryGrid& src,
                                    const BoundaryGrid& tgt, Exec exec = Exec::parallel);

/// Neumann-Poincare operator K*: principal-value cotangent part on the exact
/// Hilbert rule, analytic diagonal limits, smooth remainder on the trapezoid.
DenseOperator assemble_kstar(const LameParams& p, const BoundaryGrid& g,
                             Exec exec = Exec::parallel);

/// Traction at tgt nodes of the single layer on src (disjoint grids).
DenseOperator assemble_traction_cross(const LameParams& p, const BoundaryGrid& src,
                                      const BoundaryGrid& tgt, Exec exec = Exec::parallel);

enum class TraceSide { interior, exterior };

/// (+-1/2 I + K*)[phi] from an assembled K*.
Density conormal_trace(const DenseOperator& kstar, const Density& phi, TraceSide side);

struct PotentialEval {
  std::vector<Vec2> value;
  std::vector<Mat2> gradient;  // gradient[k](i,l) = d_l u_i, present if requested
  bool near_boundary_warning = false;
};

/// S_src[phi] (and its gradient for order 1) at arbitrary points off the
/// boundary; flags points closer than five grid spacings.
PotentialEval eval_potential(const LameParams& p, const BoundaryGrid& src, const Density& phi,
                             const std::vector<Vec2>& points, int derivative_order = 0,
                             Exec exec = Exec::parallel);

/// Discrete H^s proxy norm in the parameter variable, s in {-1/2, 1/2}:
/// ||phi||^2 = 2pi sum_k (1+k^2)^s sum_c |phi^_k,c|^2.
double sobolev_norm(const BoundaryGrid& g, const Density& phi, double s,
                    Exec exec = Exec::parallel);

/// Quadrature-weighted pairing <phi, psi_l> with the rigid basis field l.
double psi_pairing(const BoundaryGrid& g, const Density& phi, const RigidBasis& basis, int l);

/// Removes the rigid-basis components of phi in the weighted pairing.
Density project_psi(const BoundaryGrid& g, const Density& phi);

/// Nodal samples of a rigid basis field.
Density rigid_nodal(const BoundaryGrid& g, const RigidBasis& basis, int l);

/// Weighted L2 pairing of two nodal densities.
double weighted_pairing(const BoundaryGrid& g, const Density& a, const Density& b);

}  // namespace ebi
