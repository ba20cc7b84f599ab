#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ebi/fields.hpp"
#include "ebi/geometry.hpp"
#include "ebi/material.hpp"
#include "ebi/numerics.hpp"
#include "ebi/potentials.hpp"

namespace ebi {

enum class LimitMode { hard, soft };  // mu -> infinity / kappa = mu -> 0

/// Assembled block system for the transmission problem on one or more
/// disjoint inclusion boundaries. Factored once; solves are per-field.
/// Rigid-motion constraints on the exterior densities are enforced by
/// bordering; the constraint values follow from the data so that the block
/// rows stay mutually consistent.
class TransmissionSystem {
 public:
  TransmissionSystem(ContrastPair pair, std::vector<BoundaryGrid> grids,
                     Exec exec = Exec::parallel);

  int components() const { return static_cast<int>(grids_.size()); }
  const BoundaryGrid& grid(int c) const { return grids_[c]; }
  const ContrastPair& pair() const { return pair_; }
  double rcond() const { return solver_->rcond(); }

  struct Solution;
  Solution solve(std::shared_ptr<const BackgroundField> h) const;

  // Nodal traces on component c for given densities (used by energy/trace code).
  Density exterior_value_trace(const std::vector<Density>& phi, int c) const;
  Density exterior_traction_trace(const std::vector<Density>& phi, int c) const;
  Density interior_value_trace(const Density& psi, int c) const;
  Density interior_traction_trace(const Density& psi, int c) const;

 private:
  ContrastPair pair_;
  std::vector<BoundaryGrid> grids_;
  Exec exec_;
  std::vector<int> offset_;  // dof offset per component
  int dof_per_side_ = 0;
  std::vector<DenseOperator> s_inc_self_, k_inc_self_, s_bg_self_, k_bg_self_;
  std::vector<std::vector<DenseOperator>> s_bg_cross_, t_bg_cross_;  // [src][tgt]
  std::unique_ptr<LinearSolver> solver_;

  friend struct TransmissionContext;
};

struct TransmissionSystem::Solution {
  std::shared_ptr<const TransmissionSystem> system;
  std::shared_ptr<const BackgroundField> h;
  std::vector<Density> phi;  // exterior densities, one per component
  std::vector<Density> psi;  // interior densities
  VectorXd multipliers;
  bool admissibility_warning = false;
};

using TransmissionSolution = TransmissionSystem::Solution;

TransmissionSolution solve_transmission(const ContrastPair& pair,
                                        const std::vector<BoundaryGrid>& grids,
                                        std::shared_ptr<const BackgroundField> h,
                                        Exec exec = Exec::parallel);

/// Limit densities phi_inf / phi_0 on the same boundaries:
///   (-1/2 I + K0*)[phi_inf] = -dh/dnu0   (hard)
///   (+1/2 I + K0*)[phi_0]   = -dh/dnu0   (soft)
/// bordered with per-component rigid-motion orthogonality.
struct LimitSolution {
  LimitMode mode;
  LameParams background;
  std::vector<BoundaryGrid> grids;
  std::shared_ptr<const BackgroundField> h;
  std::vector<Density> phi;
  VectorXd multipliers;
};

LimitSolution solve_limit(const LameParams& p0, const std::vector<BoundaryGrid>& grids,
                          std::shared_ptr<const BackgroundField> h, LimitMode mode,
                          Exec exec = Exec::parallel);

/// Least-squares fit of the hard-limit boundary trace to the rigid basis,
/// one coefficient triple per component; origin of the rotation field is the
/// component's curve center unless overridden.
struct RigidCoefficients {
  std::vector<Vec3> coefficients;
  double fit_residual_sup = 0.0;       // worst nodal residual of the fit
  double traction_orthogonality = 0.0; // worst |<du/dnu0|+, psi_l>|
};

RigidCoefficients recover_rigid_coefficients(const LimitSolution& sol,
                                             std::optional<Vec2> origin = std::nullopt);

struct FieldSample {
  Vec2 value = Vec2::Zero();
  Mat2 gradient = Mat2::Zero();
  bool near_boundary = false;
  int region = -1;  // -1 exterior, else component index
};

FieldSample eval_solution(const TransmissionSolution& sol, const Vec2& x,
                          int derivative_order = 0);
FieldSample eval_solution(const LimitSolution& sol, const Vec2& x, int derivative_order = 0);

/// True if x lies inside the (closed) curve sampled by the grid.
bool grid_contains(const BoundaryGrid& g, const Vec2& x);

/// Energy of the transmission solution: elastic energy of u inside the
/// inclusions plus the energy of u - h over the exterior truncated at the
/// circle of radius R. Both pieces are evaluated as boundary flux integrals,
/// the outer one on a circle quadrature with n_outer nodes.
double energy_J(const TransmissionSolution& sol, double R, int n_outer = 256);

}  // namespace ebi
