#include <doctest.h>

#include <random>

#include "ebi/material.hpp"

using namespace ebi;

TEST_CASE("lame parameter construction and derived constants") {
  const LameParams p = new_lame_params(0.0, 1.0, 2);
  CHECK(p.alpha() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(p.beta() == doctest::Approx(0.25).epsilon(1e-15));

  const LameParams q = new_lame_params(1.0, 2.0, 2);
  CHECK(q.kappa() == doctest::Approx(3.0).epsilon(1e-15));

  CHECK_THROWS_AS(new_lame_params(-2.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(new_lame_params(0.0, -1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(new_lame_params(0.0, 1.0, 5), std::invalid_argument);
  CHECK_NOTHROW(new_lame_params(0.5, 1.0, 3));
}

TEST_CASE("alpha/beta ordering over admissible parameters") {
  std::mt19937_64 rng(7);
  auto uni = [&](double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
  };
  for (int i = 0; i < 200; ++i) {
    const double mu = uni(1e-3, 1e3);
    double lambda = uni(-0.9, 4.0) * mu;
    if (2.0 * lambda + 2.0 * mu <= 0.0) lambda = -0.9 * mu;
    const LameParams p = new_lame_params(lambda, mu, 2);
    CHECK(p.alpha() > 0.0);
    CHECK(p.alpha() >= p.beta());
    if (lambda > 0.0) CHECK(p.beta() > 0.0);
    CHECK(p.kappa() == doctest::Approx(lambda + mu).epsilon(1e-14));
  }
}

TEST_CASE("elasticity tensor application") {
  const Mat2 eye = Mat2::Identity();
  CHECK((apply_elasticity_tensor(new_lame_params(0.0, 1.0, 2), eye) - 2.0 * eye).norm() == 0.0);
  CHECK((apply_elasticity_tensor(new_lame_params(1.0, 0.5, 2), eye) - 3.0 * eye).norm() ==
        doctest::Approx(0.0));
  CHECK(apply_elasticity_tensor(new_lame_params(2.0, 3.0, 2), Mat2::Zero()).norm() == 0.0);

  // Linearity and symmetry preservation.
  std::mt19937_64 rng(11);
  auto uni = [&] { return (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  const LameParams p = new_lame_params(1.3, 0.7, 2);
  for (int i = 0; i < 50; ++i) {
    Mat2 s1, s2;
    s1 << uni(), uni(), 0.0, uni();
    s1(1, 0) = s1(0, 1);
    s2 << uni(), uni(), 0.0, uni();
    s2(1, 0) = s2(0, 1);
    const double a = uni(), b = uni();
    const Mat2 lhs = apply_elasticity_tensor(p, a * s1 + b * s2);
    const Mat2 rhs = a * apply_elasticity_tensor(p, s1) + b * apply_elasticity_tensor(p, s2);
    CHECK((lhs - rhs).norm() <= 1e-14 * (1.0 + rhs.norm()));
    CHECK((lhs - lhs.transpose()).norm() <= 1e-14 * (1.0 + lhs.norm()));
  }
}

TEST_CASE("contrast admissibility") {
  auto pair = [](double l0, double m0, double l1, double m1) {
    return ContrastPair{new_lame_params(l0, m0, 2), new_lame_params(l1, m1, 2)};
  };
  CHECK(check_contrast(pair(1, 1, 2, 2)));
  CHECK_FALSE(check_contrast(pair(1, 1, 2, 0.5)));
  CHECK_FALSE(check_contrast(pair(1, 1, 1, 2)));
}
