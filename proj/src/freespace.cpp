#include "ebi/freespace.hpp"

#include <cmath>
#include <stdexcept>

#include "ebi/parallel.hpp"

namespace ebi {

TransmissionSystem::TransmissionSystem(ContrastPair pair, std::vector<BoundaryGrid> grids,
                                       Exec exec)
    : pair_(pair), grids_(std::move(grids)), exec_(exec) {
  if (grids_.empty()) throw std::invalid_argument("TransmissionSystem: no boundaries");
  if (pair_.background.dim != 2 || pair_.inclusion.dim != 2) {
    throw std::invalid_argument("TransmissionSystem: only dim = 2 is supported");
  }
  require_disjoint(grids_);
  const int nc = components();
  offset_.resize(nc);
  int off = 0;
  for (int c = 0; c < nc; ++c) {
    offset_[c] = off;
    off += 2 * grids_[c].n;
  }
  dof_per_side_ = off;

  s_inc_self_.reserve(nc);
  k_inc_self_.reserve(nc);
  s_bg_self_.reserve(nc);
  k_bg_self_.reserve(nc);
  for (int c = 0; c < nc; ++c) {
    s_inc_self_.push_back(assemble_single_layer(pair_.inclusion, grids_[c], exec_));
    k_inc_self_.push_back(assemble_kstar(pair_.inclusion, grids_[c], exec_));
    s_bg_self_.push_back(assemble_single_layer(pair_.background, grids_[c], exec_));
    k_bg_self_.push_back(assemble_kstar(pair_.background, grids_[c], exec_));
  }
  s_bg_cross_.assign(nc, std::vector<DenseOperator>(nc));
  t_bg_cross_.assign(nc, std::vector<DenseOperator>(nc));
  for (int src = 0; src < nc; ++src) {
    for (int tgt = 0; tgt < nc; ++tgt) {
      if (src == tgt) continue;
      s_bg_cross_[src][tgt] =
          assemble_single_layer(pair_.background, grids_[src], grids_[tgt], exec_);
      t_bg_cross_[src][tgt] =
          assemble_traction_cross(pair_.background, grids_[src], grids_[tgt], exec_);
    }
  }

  // Unknowns: [psi_1..psi_n, phi_1..phi_n, multipliers(3n)].
  // Rows: [value_1..value_n, traction_1..traction_n, constraints(3n)].
  const int n2 = 2 * dof_per_side_;
  const int k = 3 * nc;
  MatrixXd aug = MatrixXd::Zero(n2 + k, n2 + k);
  for (int c = 0; c < nc; ++c) {
    const int nb = 2 * grids_[c].n;
    const int rv = offset_[c];
    const int rt = dof_per_side_ + offset_[c];
    const int cpsi = offset_[c];
    aug.block(rv, cpsi, nb, nb) = s_inc_self_[c].a;
    aug.block(rt, cpsi, nb, nb) = k_inc_self_[c].a - 0.5 * MatrixXd::Identity(nb, nb);
    for (int src = 0; src < nc; ++src) {
      const int cphi = dof_per_side_ + offset_[src];
      const int ns = 2 * grids_[src].n;
      if (src == c) {
        aug.block(rv, cphi, nb, nb) = -s_bg_self_[c].a;
        aug.block(rt, cphi, nb, nb) =
            -(k_bg_self_[c].a + 0.5 * MatrixXd::Identity(nb, nb));
      } else {
        aug.block(rv, cphi, nb, ns) = -s_bg_cross_[src][c].a;
        aug.block(rt, cphi, nb, ns) = -t_bg_cross_[src][c].a;
      }
    }
    // Multiplier columns add rigid fields to the traction rows of component c
    // (value-row injection is annihilated by the interior layer and leaves the
    // bordered matrix singular); constraint rows pin the weighted rigid
    // pairings of phi_c.
    const RigidBasis basis = rigid_basis(2, grids_[c].curve.center);
    for (int l = 0; l < 3; ++l) {
      const Density psi_l = rigid_nodal(grids_[c], basis, l);
      const int mrow = n2 + 3 * c + l;
      const int mcol = n2 + 3 * c + l;
      aug.block(rt, mcol, nb, 1) = psi_l.v;
      for (int mm = 0; mm < grids_[c].n; ++mm) {
        aug(mrow, dof_per_side_ + offset_[c] + 2 * mm) = grids_[c].w[mm] * psi_l.v[2 * mm];
        aug(mrow, dof_per_side_ + offset_[c] + 2 * mm + 1) = grids_[c].w[mm] * psi_l.v[2 * mm + 1];
      }
    }
  }
  solver_ = std::make_unique<LinearSolver>(std::move(aug));
}

TransmissionSolution TransmissionSystem::solve(std::shared_ptr<const BackgroundField> h) const {
  const int nc = components();
  const int n2 = 2 * dof_per_side_;
  VectorXd rhs = VectorXd::Zero(n2 + 3 * nc);
  for (int c = 0; c < nc; ++c) {
    const Density hv = h->values_on(grids_[c]);
    const Density ht = h->traction_on(pair_.background, grids_[c]);
    rhs.segment(offset_[c], 2 * grids_[c].n) = hv.v;
    rhs.segment(dof_per_side_ + offset_[c], 2 * grids_[c].n) = ht.v;
    // The traction rows paired against rigid motions force
    // <phi_c, psi_l> = -<dh/dnu0, psi_l>; use that consistent value.
    const RigidBasis basis = rigid_basis(2, grids_[c].curve.center);
    for (int l = 0; l < 3; ++l) {
      rhs[n2 + 3 * c + l] = -psi_pairing(grids_[c], ht, basis, l);
    }
  }
  VectorXd sol = solver_->solve(rhs);

  Solution out;
  out.h = std::move(h);
  out.multipliers = sol.tail(3 * nc);
  out.admissibility_warning = !pair_.admissible();
  out.phi.resize(nc);
  out.psi.resize(nc);
  for (int c = 0; c < nc; ++c) {
    out.psi[c] = Density(sol.segment(offset_[c], 2 * grids_[c].n));
    out.phi[c] = Density(sol.segment(dof_per_side_ + offset_[c], 2 * grids_[c].n));
  }
  return out;
}

Density TransmissionSystem::exterior_value_trace(const std::vector<Density>& phi, int c) const {
  VectorXd v = s_bg_self_[c].a * phi[c].v;
  for (int src = 0; src < components(); ++src) {
    if (src != c) v += s_bg_cross_[src][c].a * phi[src].v;
  }
  return Density(v);
}

Density TransmissionSystem::exterior_traction_trace(const std::vector<Density>& phi, int c) const {
  VectorXd v = 0.5 * phi[c].v + k_bg_self_[c].a * phi[c].v;
  for (int src = 0; src < components(); ++src) {
    if (src != c) v += t_bg_cross_[src][c].a * phi[src].v;
  }
  return Density(v);
}

Density TransmissionSystem::interior_value_trace(const Density& psi, int c) const {
  return Density(s_inc_self_[c].a * psi.v);
}

Density TransmissionSystem::interior_traction_trace(const Density& psi, int c) const {
  return Density(-0.5 * psi.v + k_inc_self_[c].a * psi.v);
}

TransmissionSolution solve_transmission(const ContrastPair& pair,
                                        const std::vector<BoundaryGrid>& grids,
                                        std::shared_ptr<const BackgroundField> h, Exec exec) {
  auto system = std::make_shared<TransmissionSystem>(pair, grids, exec);
  TransmissionSolution sol = system->solve(std::move(h));
  sol.system = system;
  return sol;
}

LimitSolution solve_limit(const LameParams& p0, const std::vector<BoundaryGrid>& grids,
                          std::shared_ptr<const BackgroundField> h, LimitMode mode, Exec exec) {
  if (grids.empty()) throw std::invalid_argument("solve_limit: no boundaries");
  require_disjoint(grids);
  const int nc = static_cast<int>(grids.size());
  std::vector<int> offset(nc);
  int off = 0;
  for (int c = 0; c < nc; ++c) {
    offset[c] = off;
    off += 2 * grids[c].n;
  }
  const double jump = (mode == LimitMode::hard) ? -0.5 : 0.5;
  MatrixXd aug = MatrixXd::Zero(off + 3 * nc, off + 3 * nc);
  VectorXd rhs = VectorXd::Zero(off + 3 * nc);
  for (int c = 0; c < nc; ++c) {
    const int nb = 2 * grids[c].n;
    DenseOperator k0 = assemble_kstar(p0, grids[c], exec);
    aug.block(offset[c], offset[c], nb, nb) = k0.a + jump * MatrixXd::Identity(nb, nb);
    for (int src = 0; src < nc; ++src) {
      if (src == c) continue;
      aug.block(offset[c], offset[src], nb, 2 * grids[src].n) =
          assemble_traction_cross(p0, grids[src], grids[c], exec).a;
    }
    const Density ht = h->traction_on(p0, grids[c]);
    rhs.segment(offset[c], nb) = -ht.v;
    const RigidBasis basis = rigid_basis(2, grids[c].curve.center);
    for (int l = 0; l < 3; ++l) {
      const Density psi_l = rigid_nodal(grids[c], basis, l);
      const int m = off + 3 * c + l;
      aug.block(offset[c], m, nb, 1) = psi_l.v;
      for (int mm = 0; mm < grids[c].n; ++mm) {
        aug(m, offset[c] + 2 * mm) = grids[c].w[mm] * psi_l.v[2 * mm];
        aug(m, offset[c] + 2 * mm + 1) = grids[c].w[mm] * psi_l.v[2 * mm + 1];
      }
    }
  }
  LinearSolver solver(std::move(aug));
  VectorXd sol = solver.solve(rhs);
  LimitSolution out;
  out.mode = mode;
  out.background = p0;
  out.grids = grids;
  out.h = std::move(h);
  out.multipliers = sol.tail(3 * nc);
  out.phi.resize(nc);
  for (int c = 0; c < nc; ++c) out.phi[c] = Density(sol.segment(offset[c], 2 * grids[c].n));
  return out;
}

RigidCoefficients recover_rigid_coefficients(const LimitSolution& sol, std::optional<Vec2> origin) {
  if (sol.mode != LimitMode::hard) {
    throw std::invalid_argument("recover_rigid_coefficients: hard-limit solution required");
  }
  const int nc = static_cast<int>(sol.grids.size());
  RigidCoefficients out;
  out.coefficients.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const BoundaryGrid& g = sol.grids[c];
    DenseOperator s0 = assemble_single_layer(sol.background, g);
    Density trace(s0.a * sol.phi[c].v);
    for (int src = 0; src < nc; ++src) {
      if (src != c) {
        trace.v += assemble_single_layer(sol.background, sol.grids[src], g).a * sol.phi[src].v;
      }
    }
    trace.v += sol.h->values_on(g).v;

    const RigidBasis basis = rigid_basis(2, origin.value_or(g.curve.center));
    Mat3 gram;
    Vec3 rhs;
    for (int l = 0; l < 3; ++l) {
      rhs[l] = psi_pairing(g, trace, basis, l);
      for (int kk = 0; kk < 3; ++kk) {
        gram(l, kk) = weighted_pairing(g, rigid_nodal(g, basis, l), rigid_nodal(g, basis, kk));
      }
    }
    const Vec3 coef = gram.ldlt().solve(rhs);
    out.coefficients[c] = coef;

    Density resid = trace;
    for (int l = 0; l < 3; ++l) resid.v -= coef[l] * rigid_nodal(g, basis, l).v;
    for (int mm = 0; mm < g.n; ++mm) {
      out.fit_residual_sup = std::max(out.fit_residual_sup, resid.at(mm).norm());
    }

    // Exterior traction of the hard-limit field pairs to zero with the basis.
    DenseOperator k0 = assemble_kstar(sol.background, g);
    Density traction = conormal_trace(k0, sol.phi[c], TraceSide::exterior);
    for (int src = 0; src < nc; ++src) {
      if (src != c) {
        traction.v += assemble_traction_cross(sol.background, sol.grids[src], g).a *
                      sol.phi[src].v;
      }
    }
    traction.v += sol.h->traction_on(sol.background, g).v;
    for (int l = 0; l < 3; ++l) {
      out.traction_orthogonality =
          std::max(out.traction_orthogonality, std::abs(psi_pairing(g, traction, basis, l)));
    }
  }
  if (out.fit_residual_sup > 1e-4) {
    throw std::runtime_error("recover_rigid_coefficients: non-converged hard-limit solve (fit residual " +
                             std::to_string(out.fit_residual_sup) + ")");
  }
  return out;
}

bool grid_contains(const BoundaryGrid& g, const Vec2& x) {
  // Winding number of the sampled polygon.
  double angle = 0.0;
  for (int m = 0; m < g.n; ++m) {
    const Vec2 a = g.x[m] - x;
    const Vec2 b = g.x[(m + 1) % g.n] - x;
    angle += std::atan2(a.x() * b.y() - a.y() * b.x(), a.dot(b));
  }
  return std::abs(angle) > kPi;
}

namespace {

FieldSample eval_exterior(const LameParams& p0, const std::vector<BoundaryGrid>& grids,
                          const std::vector<Density>& phi, const BackgroundField& h, const Vec2& x,
                          int order) {
  FieldSample s;
  s.region = -1;
  s.value = h.value(x);
  if (order == 1) s.gradient = h.gradient(x);
  for (std::size_t c = 0; c < grids.size(); ++c) {
    PotentialEval pe = eval_potential(p0, grids[c], phi[c], {x}, order);
    s.value += pe.value[0];
    if (order == 1) s.gradient += pe.gradient[0];
    s.near_boundary = s.near_boundary || pe.near_boundary_warning;
  }
  return s;
}

}  // namespace

FieldSample eval_solution(const TransmissionSolution& sol, const Vec2& x, int derivative_order) {
  const TransmissionSystem& sys = *sol.system;
  for (int c = 0; c < sys.components(); ++c) {
    if (grid_contains(sys.grid(c), x)) {
      PotentialEval pe =
          eval_potential(sys.pair().inclusion, sys.grid(c), sol.psi[c], {x}, derivative_order);
      FieldSample s;
      s.region = c;
      s.value = pe.value[0];
      if (derivative_order == 1) s.gradient = pe.gradient[0];
      s.near_boundary = pe.near_boundary_warning;
      return s;
    }
  }
  std::vector<BoundaryGrid> grids;
  for (int c = 0; c < sys.components(); ++c) grids.push_back(sys.grid(c));
  return eval_exterior(sys.pair().background, grids, sol.phi, *sol.h, x, derivative_order);
}

FieldSample eval_solution(const LimitSolution& sol, const Vec2& x, int derivative_order) {
  for (std::size_t c = 0; c < sol.grids.size(); ++c) {
    if (grid_contains(sol.grids[c], x)) {
      if (sol.mode == LimitMode::soft) {
        throw std::invalid_argument("eval_solution: soft-limit field is undefined inside a cavity");
      }
      // Hard limit: rigid field recovered from the boundary trace.
      RigidCoefficients rc = recover_rigid_coefficients(sol);
      const RigidBasis basis = rigid_basis(2, sol.grids[c].curve.center);
      FieldSample s;
      s.region = static_cast<int>(c);
      for (int l = 0; l < 3; ++l) {
        s.value += rc.coefficients[c][l] * basis.value(l, x);
        if (derivative_order == 1) s.gradient += rc.coefficients[c][l] * basis.gradient(l);
      }
      return s;
    }
  }
  return eval_exterior(sol.background, sol.grids, sol.phi, *sol.h, x, derivative_order);
}

double energy_J(const TransmissionSolution& sol, double R, int n_outer) {
  const TransmissionSystem& sys = *sol.system;
  const LameParams& p0 = sys.pair().background;
  double cover = 0.0;
  for (int c = 0; c < sys.components(); ++c) {
    cover = std::max(cover,
                     sys.grid(c).curve.center.norm() + sys.grid(c).curve.radius_bound());
  }
  if (R < 2.0 * cover) {
    throw std::invalid_argument("energy_J: truncation radius must be at least twice the cover radius");
  }

  // Interior pieces: 1/2 <du/dnu|-, u> on each inclusion boundary.
  double total = 0.0;
  for (int c = 0; c < sys.components(); ++c) {
    const Density ut = sys.interior_value_trace(sol.psi[c], c);
    const Density tt = sys.interior_traction_trace(sol.psi[c], c);
    total += 0.5 * weighted_pairing(sys.grid(c), tt, ut);
  }

  // Exterior piece for v = u - h over the annulus between the inclusions and
  // the circle of radius R, as boundary flux integrals.
  for (int c = 0; c < sys.components(); ++c) {
    const Density vt = sys.exterior_value_trace(sol.phi, c);
    const Density tt = sys.exterior_traction_trace(sol.phi, c);
    total -= 0.5 * weighted_pairing(sys.grid(c), tt, vt);
  }
  const BoundaryGrid ring = sample_grid(make_circle(R), n_outer);
  std::vector<Vec2> v(ring.n, Vec2::Zero());
  std::vector<Mat2> grad(ring.n, Mat2::Zero());
  for (int c = 0; c < sys.components(); ++c) {
    PotentialEval pe = eval_potential(p0, sys.grid(c), sol.phi[c], ring.x, 1);
    for (int m = 0; m < ring.n; ++m) {
      v[m] += pe.value[m];
      grad[m] += pe.gradient[m];
    }
  }
  double outer = 0.0;
  for (int m = 0; m < ring.n; ++m) {
    const Mat2 strain = 0.5 * (grad[m] + grad[m].transpose());
    const Vec2 tr = apply_elasticity_tensor(p0, strain) * ring.normal[m];
    outer += ring.w[m] * tr.dot(v[m]);
  }
  total += 0.5 * outer;
  return total;
}

}  // namespace ebi
