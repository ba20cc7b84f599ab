#include "ebi/potentials.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ebi/parallel.hpp"

namespace ebi {

namespace {

const Mat2 kRot90 = (Mat2() << 0.0, 1.0, -1.0, 0.0).finished();  // J: n_j z_i - n_i z_j = (z^n) J

void require_same_grid(const BoundaryGrid& a, const BoundaryGrid& b, const char* who) {
  if (a.n != b.n || (a.x[0] - b.x[0]).norm() > 1e-14) {
    throw std::invalid_argument(std::string(who) + ": self mode requires src = tgt grid");
  }
}

bool grids_coincide(const BoundaryGrid& a, const BoundaryGrid& b) {
  if (a.n != b.n) return false;
  return (a.x[0] - b.x[0]).norm() < 1e-14 && (a.x[a.n / 2] - b.x[b.n / 2]).norm() < 1e-14;
}

}  // namespace

std::vector<double> log_rule_weights(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("log_rule_weights: even n required");
  const int half = n / 2;
  std::vector<double> r(n);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int m = 1; m < half; ++m) s += std::cos(kTwoPi * m * k / n) / m;
    r[k] = -(4.0 * kPi / n) * s - (4.0 * kPi / (n * n)) * std::cos(kPi * k);
  }
  return r;
}

std::vector<double> hilbert_rule_weights(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("hilbert_rule_weights: even n required");
  std::vector<double> g(n, 0.0);
  for (int k = 1; k < n; k += 2) g[k] = -(4.0 * kPi / n) * (1.0 / std::tan(kPi * k / n));
  return g;
}

DenseOperator assemble_single_layer(const LameParams& p, const BoundaryGrid& g, Exec exec) {
  const int n = g.n;
  const double h = kTwoPi / n;
  const double a = p.alpha(), b = p.beta();
  const auto logw = log_rule_weights(n);
  DenseOperator op;
  op.kind = OperatorKind::single_layer;
  op.n_src = op.n_tgt = n;
  op.a.resize(2 * n, 2 * n);
  par::for_each_index(n, exec, [&](std::size_t iu) {
    const int i = static_cast<int>(iu);
    for (int j = 0; j < n; ++j) {
      Mat2 blk;
      const int off = ((i - j) % n + n) % n;
      if (i == j) {
        blk = (a / (4.0 * kPi) * logw[0] + h * (a / kTwoPi) * std::log(g.jac[i])) * Mat2::Identity();
        blk -= h * (b / kTwoPi) * (g.tangent[i] * g.tangent[i].transpose());
        blk *= g.jac[i];
      } else {
        const Vec2 z = g.x[i] - g.x[j];
        const double smod = 2.0 * std::sin(0.5 * (g.t[i] - g.t[j]));
        Mat2 smooth = kelvin_matrix(p, z) -
                      (a / (4.0 * kPi)) * std::log(smod * smod) * Mat2::Identity();
        blk = (a / (4.0 * kPi) * logw[off]) * Mat2::Identity() + h * smooth;
        blk *= g.jac[j];
      }
      op.a.block<2, 2>(2 * i, 2 * j) = blk;
    }
  });
  return op;
}

DenseOperator assemble_single_layer(const LameParams& p, const BoundaryGrid& src,
                                    const BoundaryGrid& tgt, Exec exec) {
  if (grids_coincide(src, tgt)) {
    require_same_grid(src, tgt, "assemble_single_layer");
    return assemble_single_layer(p, src, exec);
  }
  DenseOperator op;
  op.kind = OperatorKind::single_layer;
  op.n_src = src.n;
  op.n_tgt = tgt.n;
  op.a.resize(2 * tgt.n, 2 * src.n);
  par::for_each_index(tgt.n, exec, [&](std::size_t iu) {
    const int i = static_cast<int>(iu);
    for (int j = 0; j < src.n; ++j) {
      op.a.block<2, 2>(2 * i, 2 * j) = src.w[j] * kelvin_matrix(p, tgt.x[i] - src.x[j]);
    }
  });
  return op;
}

DenseOperator assemble_kstar(const LameParams& p, const BoundaryGrid& g, Exec exec) {
  const int n = g.n;
  const double h = kTwoPi / n;
  const double m = p.mu / (2.0 * p.mu + p.lambda);
  const auto gam = hilbert_rule_weights(n);
  DenseOperator op;
  op.kind = OperatorKind::kstar;
  op.n_src = op.n_tgt = n;
  op.a.resize(2 * n, 2 * n);
  par::for_each_index(n, exec, [&](std::size_t iu) {
    const int i = static_cast<int>(iu);
    const double ji = g.jac[i];
    for (int j = 0; j < n; ++j) {
      Mat2 blk;
      if (i == j) {
        const double aii = -g.xpp[i].dot(g.normal[i]) / (2.0 * ji * ji);
        const double wii = -g.xp[i].dot(g.xpp[i]) / (2.0 * ji * ji * ji);
        Mat2 smooth = m * aii * Mat2::Identity() + m * wii * kRot90 +
                      2.0 * (1.0 - m) * aii * (g.tangent[i] * g.tangent[i].transpose());
        blk = h * ji / kTwoPi * smooth;
      } else {
        const int off = ((i - j) % n + n) % n;
        const double cot = 1.0 / std::tan(0.5 * (g.t[j] - g.t[i]));
        const double jratio = g.jac[j] / ji;
        Mat2 smooth = traction_kernel(p, g.x[i] - g.x[j], g.normal[i]) * g.jac[j] -
                      (m / (4.0 * kPi)) * cot * jratio * kRot90;
        blk = h * smooth + gam[off] * (m / (4.0 * kPi)) * jratio * kRot90;
      }
      op.a.block<2, 2>(2 * i, 2 * j) = blk;
    }
  });
  return op;
}

DenseOperator assemble_traction_cross(const LameParams& p, const BoundaryGrid& src,
                                      const BoundaryGrid& tgt, Exec exec) {
  if (grids_coincide(src, tgt)) {
    throw std::invalid_argument("assemble_traction_cross: grids coincide; use assemble_kstar");
  }
  DenseOperator op;
  op.kind = OperatorKind::traction_cross;
  op.n_src = src.n;
  op.n_tgt = tgt.n;
  op.a.resize(2 * tgt.n, 2 * src.n);
  par::for_each_index(tgt.n, exec, [&](std::size_t iu) {
    const int i = static_cast<int>(iu);
    for (int j = 0; j < src.n; ++j) {
      op.a.block<2, 2>(2 * i, 2 * j) =
          src.w[j] * traction_kernel(p, tgt.x[i] - src.x[j], tgt.normal[i]);
    }
  });
  return op;
}

Density conormal_trace(const DenseOperator& kstar, const Density& phi, TraceSide side) {
  if (kstar.kind != OperatorKind::kstar) {
    throw std::invalid_argument("conormal_trace: operator is not K*");
  }
  const double s = (side == TraceSide::exterior) ? 0.5 : -0.5;
  return Density(s * phi.v + kstar.a * phi.v);
}

PotentialEval eval_potential(const LameParams& p, const BoundaryGrid& src, const Density& phi,
                             const std::vector<Vec2>& points, int derivative_order, Exec exec) {
  if (phi.nodes() != src.n) throw std::invalid_argument("eval_potential: density/grid mismatch");
  if (derivative_order < 0 || derivative_order > 1) {
    throw std::invalid_argument("eval_potential: derivative order must be 0 or 1");
  }
  const double contract = 5.0 * src.spacing_bound();
  PotentialEval out;
  out.value.resize(points.size());
  if (derivative_order == 1) out.gradient.resize(points.size());
  std::vector<char> near(points.size(), 0);
  par::for_each_index(points.size(), exec, [&](std::size_t k) {
    const Vec2& q = points[k];
    Vec2 val = Vec2::Zero();
    Mat2 grad = Mat2::Zero();
    double dmin = std::numeric_limits<double>::infinity();
    for (int j = 0; j < src.n; ++j) {
      const Vec2 z = q - src.x[j];
      dmin = std::min(dmin, z.norm());
      const Vec2 f = src.w[j] * phi.at(j);
      val += kelvin_matrix(p, z) * f;
      if (derivative_order == 1) {
        const auto dg = kelvin_gradient(p, z);
        for (int l = 0; l < 2; ++l) grad.col(l) += dg[l] * f;
      }
    }
    out.value[k] = val;
    if (derivative_order == 1) out.gradient[k] = grad;
    if (dmin < contract) near[k] = 1;
  });
  for (char c : near) {
    if (c) out.near_boundary_warning = true;
  }
  return out;
}

double sobolev_norm(const BoundaryGrid& g, const Density& phi, double s, Exec exec) {
  const int n = g.n;
  if (phi.nodes() != n) throw std::invalid_argument("sobolev_norm: density/grid mismatch");
  // Direct DFT per component; k in [-n/2, n/2).
  std::vector<double> mode_energy(n, 0.0);
  par::for_each_index(n, exec, [&](std::size_t ku) {
    const int k = static_cast<int>(ku) - n / 2;
    std::complex<double> c0{0.0, 0.0}, c1{0.0, 0.0};
    for (int mm = 0; mm < n; ++mm) {
      const std::complex<double> e = std::polar(1.0, -k * g.t[mm]);
      c0 += phi.v[2 * mm] * e;
      c1 += phi.v[2 * mm + 1] * e;
    }
    c0 /= n;
    c1 /= n;
    mode_energy[ku] = std::pow(1.0 + double(k) * k, s) * (std::norm(c0) + std::norm(c1));
  });
  double total = 0.0;
  for (double e : mode_energy) total += e;
  return std::sqrt(kTwoPi * total);
}

double psi_pairing(const BoundaryGrid& g, const Density& phi, const RigidBasis& basis, int l) {
  double s = 0.0;
  for (int mm = 0; mm < g.n; ++mm) s += g.w[mm] * phi.at(mm).dot(basis.value(l, g.x[mm]));
  return s;
}

double weighted_pairing(const BoundaryGrid& g, const Density& a, const Density& b) {
  double s = 0.0;
  for (int mm = 0; mm < g.n; ++mm) s += g.w[mm] * a.at(mm).dot(b.at(mm));
  return s;
}

Density rigid_nodal(const BoundaryGrid& g, const RigidBasis& basis, int l) {
  Density d = Density::zero(g.n);
  for (int mm = 0; mm < g.n; ++mm) d.set(mm, basis.value(l, g.x[mm]));
  return d;
}

Density project_psi(const BoundaryGrid& g, const Density& phi) {
  const RigidBasis basis = rigid_basis(2);
  Mat3 gram;
  Vec3 rhs;
  std::array<Density, 3> psi;
  for (int l = 0; l < 3; ++l) psi[l] = rigid_nodal(g, basis, l);
  for (int l = 0; l < 3; ++l) {
    rhs[l] = weighted_pairing(g, phi, psi[l]);
    for (int k = 0; k < 3; ++k) gram(l, k) = weighted_pairing(g, psi[l], psi[k]);
  }
  const Vec3 coef = gram.ldlt().solve(rhs);
  Density out = phi;
  for (int l = 0; l < 3; ++l) out.v -= coef[l] * psi[l].v;
  return out;
}

}  // namespace ebi
