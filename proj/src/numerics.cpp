#include "ebi/numerics.hpp"

#include <sstream>
#include <stdexcept>

namespace ebi {

LinearSolver::LinearSolver(MatrixXd a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols()) throw std::invalid_argument("LinearSolver: matrix must be square");
  lu_.compute(a_);
  rcond_ = lu_.rcond();
  if (!(rcond_ > 1e-14)) {
    std::ostringstream os;
    os << "linear system singular to working precision (rcond ~ " << rcond_ << ")";
    throw std::runtime_error(os.str());
  }
}

VectorXd LinearSolver::solve(const VectorXd& b) const {
  if (b.size() != a_.rows()) throw std::invalid_argument("LinearSolver: rhs size mismatch");
  VectorXd x = lu_.solve(b);
  // One refinement step; cheap next to the factorization and tightens the
  // residual for the poorly scaled extreme-parameter blocks.
  x += lu_.solve(b - a_ * x);
  return x;
}

VectorXd lu_solve(const MatrixXd& a, const VectorXd& b) {
  LinearSolver s(a);
  return s.solve(b);
}

BorderedSolution solve_constrained(const MatrixXd& a, const MatrixXd& b, const MatrixXd& c,
                                   const VectorXd& rhs, const VectorXd& crhs) {
  const auto n = a.rows();
  const auto k = b.cols();
  if (a.cols() != n || b.rows() != n || c.cols() != n || c.rows() != k || rhs.size() != n ||
      crhs.size() != k) {
    throw std::invalid_argument("solve_constrained: inconsistent dimensions");
  }
  MatrixXd aug = MatrixXd::Zero(n + k, n + k);
  aug.topLeftCorner(n, n) = a;
  aug.topRightCorner(n, k) = b;
  aug.bottomLeftCorner(k, n) = c;
  VectorXd f(n + k);
  f.head(n) = rhs;
  f.tail(k) = crhs;
  LinearSolver s(std::move(aug));
  VectorXd xz = s.solve(f);
  return BorderedSolution{xz.head(n), xz.tail(k)};
}

BorderedSolution solve_bordered(const BorderedSystem& sys) {
  if (sys.b.cols() > 6) throw std::invalid_argument("BorderedSystem: k must be <= 6");
  return solve_constrained(sys.a, sys.b, sys.b.transpose(), sys.rhs, sys.crhs);
}

}  // namespace ebi
