#include "ebi/material.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ebi {

LameParams new_lame_params(double lambda, double mu, int dim) {
  if (dim != 2 && dim != 3) {
    throw std::invalid_argument("LameParams: dim must be 2 or 3, got " + std::to_string(dim));
  }
  if (!(mu > 0.0) || !(dim * lambda + 2.0 * mu > 0.0)) {
    throw std::invalid_argument(
        "LameParams: strong convexity violated (need mu > 0 and dim*lambda + 2*mu > 0): "
        "lambda=" + std::to_string(lambda) + " mu=" + std::to_string(mu));
  }
  if (!std::isfinite(lambda) || !std::isfinite(mu)) {
    throw std::invalid_argument("LameParams: parameters must be finite");
  }
  return LameParams{lambda, mu, dim};
}

Mat2 apply_elasticity_tensor(const LameParams& p, const Mat2& strain) {
  return p.lambda * strain.trace() * Mat2::Identity() + 2.0 * p.mu * strain;
}

bool ContrastPair::admissible() const {
  return (inclusion.lambda - background.lambda) * (inclusion.mu - background.mu) > 0.0;
}

bool check_contrast(const ContrastPair& pair) { return pair.admissible(); }

}  // namespace ebi
