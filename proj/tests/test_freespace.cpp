#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "ebi/freespace.hpp"
#include "test_helpers.hpp"

using namespace ebi;

namespace {

using ebi::testing::extrapolate_to_zero;
using ebi::testing::pair2;
using ebi::testing::sup_norm;

}  // namespace

TEST_CASE("transmission with rigid data: phi = 0 and the interior layer carries h") {
  const auto pair = pair2(1.0, 1.0, 2.0, 3.0);
  const BoundaryGrid g = sample_grid(make_ellipse(1.0, 0.6), 128);
  const auto h = std::make_shared<RigidField>(0);
  const TransmissionSolution sol = solve_transmission(pair, {g}, h);
  CHECK(sup_norm(sol.phi[0]) <= 1e-10);
  Density trace = sol.system->interior_value_trace(sol.psi[0], 0);
  trace.v -= h->values_on(g).v;
  CHECK(sup_norm(trace) <= 1e-8);
  CHECK(sol.multipliers.norm() <= 1e-8);
}

TEST_CASE("zero contrast: phi vanishes and u equals h") {
  const auto pair = pair2(1.0, 1.0, 1.0, 1.0);
  const BoundaryGrid g = sample_grid(make_circle(1.0), 128);
  const TransmissionSolution sol = solve_transmission(pair, {g}, shear_field());
  CHECK(sup_norm(sol.phi[0]) <= 1e-9);
  CHECK(sol.admissibility_warning);  // zero contrast trips the flag

  for (const Vec2& x : {Vec2{2.0, 0.5}, Vec2{0.2, -0.3}, Vec2{-4.0, 1.0}}) {
    const FieldSample s = eval_solution(sol, x);
    CHECK((s.value - sol.h->value(x)).norm() <= 1e-9);
  }
}

TEST_CASE("psi-orthogonality of the exterior density") {
  const auto pair = pair2(1.0, 1.0, 2.0, 3.0);
  const BoundaryGrid g = sample_grid(make_kite(), 128);
  const TransmissionSolution sol = solve_transmission(pair, {g}, shear_field());
  const RigidBasis basis = rigid_basis(2, g.curve.center);
  const double scale = sobolev_norm(g, sol.phi[0], -0.5);
  for (int l = 0; l < 3; ++l) {
    CHECK(std::abs(psi_pairing(g, sol.phi[0], basis, l)) <= 1e-9 * scale);
  }
}

TEST_CASE("eshelby uniformity: constant strain inside a circular inclusion") {
  const auto pair = pair2(0.0, 1.0, 0.0, 2.0);
  const BoundaryGrid g = sample_grid(make_circle(1.0), 256);
  const TransmissionSolution sol = solve_transmission(pair, {g}, shear_field());
  CHECK_FALSE(pair.admissible());  // classical test case sits outside the representation condition

  std::mt19937_64 rng(42);
  auto uni = [&](double lo, double hi) { return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53); };
  std::vector<Mat2> strains;
  for (int i = 0; i < 50; ++i) {
    const double r = uni(0.05, 0.6), th = uni(0.0, kTwoPi);
    const FieldSample s = eval_solution(sol, Vec2{r * std::cos(th), r * std::sin(th)}, 1);
    CHECK(s.region == 0);
    strains.push_back(0.5 * (s.gradient + s.gradient.transpose()));
  }
  Mat2 mean = Mat2::Zero();
  for (const Mat2& e : strains) mean += e;
  mean /= 50.0;
  double var = 0.0;
  for (const Mat2& e : strains) var += (e - mean).squaredNorm();
  const double rel_sd = std::sqrt(var / 50.0) / mean.norm();
  CHECK(rel_sd <= 1e-6);
}

TEST_CASE("interior and exterior traces meet across the interface") {
  const auto pair = pair2(1.0, 1.0, 2.0, 3.0);
  const BoundaryGrid g = sample_grid(make_circle(1.0), 256);
  const TransmissionSolution sol = solve_transmission(pair, {g}, shear_field());

  // Near-boundary evaluation through trigonometric upsampling of the solved
  // densities, then one-sided extrapolation of the traces onto the interface.
  const BoundaryGrid fine = sample_grid(make_circle(1.0), 2048);
  const Density phi_f = ebi::testing::resample_density(sol.phi[0], fine);
  const Density psi_f = ebi::testing::resample_density(sol.psi[0], fine);
  const std::vector<double> ladder{0.06, 0.05, 0.04, 0.03, 0.02};
  double worst = 0.0;
  for (int m = 0; m < g.n; m += 32) {
    std::vector<Vec2> in, out;
    for (double d : ladder) {
      const Vec2 xo = g.x[m] + d * g.normal[m];
      const Vec2 xi = g.x[m] - d * g.normal[m];
      out.push_back(sol.h->value(xo) +
                    eval_potential(pair.background, fine, phi_f, {xo}).value[0]);
      in.push_back(eval_potential(pair.inclusion, fine, psi_f, {xi}).value[0]);
    }
    worst = std::max(worst,
                     (extrapolate_to_zero(ladder, out) - extrapolate_to_zero(ladder, in)).norm());
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("far-field decay of the scattered part") {
  const auto pair = pair2(1.0, 1.0, 2.0, 3.0);
  const BoundaryGrid g = sample_grid(make_circle(1.0), 128);
  const TransmissionSolution sol = solve_transmission(pair, {g}, shear_field());
  double at5 = 0.0, at50 = 0.0;
  for (int dir = 0; dir < 4; ++dir) {
    const double th = kTwoPi * dir / 4.0;
    const Vec2 u{std::cos(th), std::sin(th)};
    auto scattered = [&](double r) {
      const Vec2 x = r * u;
      return (eval_solution(sol, x).value - sol.h->value(x)).norm();
    };
    at5 = std::max(at5, scattered(5.0));
    at50 = std::max(at50, scattered(50.0));
  }
  CHECK(at50 <= 0.1 * at5);
}

TEST_CASE("limit solves: rigid data and defining residuals") {
  const LameParams p0 = new_lame_params(1.0, 1.0, 2);
  const BoundaryGrid g = sample_grid(make_circle(1.0), 128);
  for (LimitMode mode : {LimitMode::hard, LimitMode::soft}) {
    const LimitSolution s = solve_limit(p0, {g}, std::make_shared<RigidField>(1), mode);
    CHECK(sup_norm(s.phi[0]) <= 1e-10);
  }

  // Hard limit: boundary trace of u_inf is a rigid motion.
  const LimitSolution hard = solve_limit(p0, {g}, shear_field(), LimitMode::hard);
  const RigidCoefficients rc = recover_rigid_coefficients(hard);
  CHECK(rc.fit_residual_sup <= 1e-6);
  CHECK(rc.traction_orthogonality <= 1e-8);

  // Soft limit: exterior traction of u_0 vanishes nodally.
  const LimitSolution soft = solve_limit(p0, {g}, shear_field(), LimitMode::soft);
  const DenseOperator k0 = assemble_kstar(p0, g);
  Density resid = conormal_trace(k0, soft.phi[0], TraceSide::exterior);
  resid.v += shear_field()->traction_on(p0, g).v;
  CHECK(sup_norm(resid) <= 1e-10);
  CHECK_THROWS_AS(eval_solution(soft, Vec2{0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("rigid coefficient recovery and origin change") {
  const LameParams p0 = new_lame_params(1.0, 1.0, 2);
  const BoundaryGrid g = sample_grid(make_circle(1.0), 128);
  const LimitSolution s1 = solve_limit(p0, {g}, std::make_shared<RigidField>(0), LimitMode::hard);
  const RigidCoefficients c1 = recover_rigid_coefficients(s1);
  CHECK((c1.coefficients[0] - Vec3{1.0, 0.0, 0.0}).norm() <= 1e-8);

  // Symmetric shear data on a centered disk has no rigid content.
  const LimitSolution s2 = solve_limit(p0, {g}, shear_field(), LimitMode::hard);
  const RigidCoefficients c2 = recover_rigid_coefficients(s2);
  CHECK(c2.coefficients[0].norm() <= 1e-8);

  // A rotation about the origin, refit about a shifted origin c, picks up the
  // compensating translation rho(c).
  const LimitSolution s3 = solve_limit(p0, {g}, std::make_shared<RigidField>(2), LimitMode::hard);
  const Vec3 about0 = recover_rigid_coefficients(s3, Vec2{0.0, 0.0}).coefficients[0];
  const Vec2 c{0.4, -0.3};
  const Vec3 aboutC = recover_rigid_coefficients(s3, c).coefficients[0];
  CHECK(aboutC[2] == doctest::Approx(about0[2]).epsilon(1e-9));
  CHECK(aboutC[0] == doctest::Approx(about0[0] + about0[2] * -c.y()).epsilon(1e-9));
  CHECK(aboutC[1] == doctest::Approx(about0[1] + about0[2] * c.x()).epsilon(1e-9));
}

TEST_CASE("energy: rigid data, zero-contrast hand value, truncation behavior") {
  const BoundaryGrid g = sample_grid(make_circle(1.0), 128);

  const auto rigid_sol =
      solve_transmission(pair2(1.0, 1.0, 2.0, 3.0), {g}, std::make_shared<RigidField>(2));
  CHECK(std::abs(energy_J(rigid_sol, 4.0)) <= 1e-10);

  // Zero contrast with uniform shear on the unit disk: the interior term is
  // (1/2) * 2 mu * |grad^s h|^2 * area = 2 pi and the exterior term vanishes.
  const auto z = solve_transmission(pair2(0.0, 1.0, 0.0, 1.0), {g}, shear_field());
  CHECK(energy_J(z, 4.0) == doctest::Approx(2.0 * kPi).epsilon(1e-8));

  // Truncation: J(R) grows monotonically toward its limit like 1/R^2 and the
  // doubling increments shrink accordingly.
  const auto sol = solve_transmission(pair2(1.0, 1.0, 2.0, 3.0), {g}, shear_field());
  const double j1 = energy_J(sol, 16.0);
  const double j2 = energy_J(sol, 32.0);
  const double j3 = energy_J(sol, 64.0);
  CHECK(j2 >= j1 - 1e-12);
  CHECK(j3 >= j2 - 1e-12);
  CHECK(std::abs(j3 - j2) <= 0.3 * std::abs(j2 - j1));
  CHECK(std::abs(j3 - j2) <= 1e-3 * std::abs(j3));
  CHECK_THROWS_AS(energy_J(sol, 1.5), std::invalid_argument);
}

TEST_CASE("hard-limit convergence rate over a quick mu sweep") {
  const BoundaryGrid g = sample_grid(make_ellipse(1.0, 0.6), 96);
  const LameParams p0 = new_lame_params(0.0, 1.0, 2);
  const auto h = shear_field();
  const LimitSolution hard = solve_limit(p0, {g}, h, LimitMode::hard);
  std::vector<double> r;
  for (double mu : {10.0, 1e3, 1e5}) {
    const auto sol = solve_transmission({p0, new_lame_params(1.0, mu, 2)}, {g}, h);
    Density diff = sol.phi[0];
    diff.v -= hard.phi[0].v;
    r.push_back(sobolev_norm(g, diff, -0.5));
  }
  CHECK(r[0] > r[1]);
  CHECK(r[1] > r[2]);
  const double c0 = r[0] * std::sqrt(10.0);
  CHECK(r[1] * std::sqrt(1e3) <= 1.5 * c0);
  CHECK(r[2] * std::sqrt(1e5) <= 1.5 * c0);
}

TEST_CASE("two inclusions: rigid data and disjointness errors") {
  const auto pair = pair2(1.0, 1.0, 2.0, 3.0);
  const BoundaryGrid g1 = sample_grid(make_circle(0.8, Vec2{-1.5, 0.0}), 96);
  const BoundaryGrid g2 = sample_grid(make_circle(0.6, Vec2{1.5, 0.3}), 96);
  const auto h = std::make_shared<RigidField>(0);
  const TransmissionSolution sol = solve_transmission(pair, {g1, g2}, h);
  CHECK(sup_norm(sol.phi[0]) <= 1e-9);
  CHECK(sup_norm(sol.phi[1]) <= 1e-9);

  const BoundaryGrid overlap = sample_grid(make_circle(0.8, Vec2{-0.9, 0.0}), 96);
  CHECK_THROWS_AS(solve_transmission(pair, {g1, overlap}, h), std::invalid_argument);
}
