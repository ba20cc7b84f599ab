#pragma once

#include "ebi/types.hpp"

namespace ebi {

/// Isotropic Lame pair (lambda, mu) with the derived constants used by the
/// Kelvin matrix. Construction enforces strong convexity:
///   mu > 0 and dim*lambda + 2*mu > 0.
struct LameParams {
  double lambda = 0.0;
  double mu = 1.0;
  int dim = 2;

  double kappa() const { return lambda + 2.0 * mu / dim; }
  double alpha() const { return 0.5 * (1.0 / mu + 1.0 / (2.0 * mu + lambda)); }
  double beta() const { return 0.5 * (1.0 / mu - 1.0 / (2.0 * mu + lambda)); }
};

LameParams new_lame_params(double lambda, double mu, int dim = 2);

/// lambda * tr(strain) * I + 2 mu * strain.
Mat2 apply_elasticity_tensor(const LameParams& p, const Mat2& strain);

struct ContrastPair {
  LameParams background;
  LameParams inclusion;

  /// (lambda - lambda0)(mu - mu0) > 0.
  bool admissible() const;
};

bool check_contrast(const ContrastPair& pair);

}  // namespace ebi
