#pragma once

#include <utility>

#include "ebi/types.hpp"

namespace ebi {

/// Dense LU solve with partial pivoting. Throws if the matrix is singular to
/// working precision (reciprocal condition estimate below ~1e-14).
VectorXd lu_solve(const MatrixXd& a, const VectorXd& b);

/// A x + B lam = rhs,  B^T x = crhs, with k = cols(B) <= 6.
struct BorderedSystem {
  MatrixXd a;
  MatrixXd b;
  VectorXd rhs;
  VectorXd crhs;
};

struct BorderedSolution {
  VectorXd x;
  VectorXd multipliers;
};

BorderedSolution solve_bordered(const BorderedSystem& sys);

/// General low-rank-constrained solve with distinct constraint rows:
///   A x + B lam = rhs,  C x = crhs   (C is k x n).
/// Used internally by the boundary-integral solvers; no cap on k.
BorderedSolution solve_constrained(const MatrixXd& a, const MatrixXd& b, const MatrixXd& c,
                                   const VectorXd& rhs, const VectorXd& crhs);

/// Factor-once/solve-many wrapper around partial-pivot LU with one step of
/// iterative refinement and a reciprocal-condition estimate.
class LinearSolver {
 public:
  explicit LinearSolver(MatrixXd a);
  VectorXd solve(const VectorXd& b) const;
  double rcond() const { return rcond_; }

 private:
  MatrixXd a_;
  Eigen::PartialPivLU<MatrixXd> lu_;
  double rcond_ = 0.0;
};

}  // namespace ebi
