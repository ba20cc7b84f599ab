#pragma once

#include <array>
#include <iosfwd>
#include <map>

#include "ebi/freespace.hpp"

namespace ebi {

using MultiIndex = std::array<int, 2>;

inline int order(MultiIndex a) { return a[0] + a[1]; }
inline double factorial(MultiIndex a) {
  auto f = [](int k) { return k == 2 ? 2.0 : 1.0; };
  return f(a[0]) * f(a[1]);
}

/// Boundary moments of the transmission densities driven by monomial sources
/// x^alpha e_j on the unit-scale reference curve B:
///   M^j_{alpha,beta} = integral over dB of y^beta phi^j_alpha(y).
/// Computed index ranges: |alpha| in {1,2}, |beta| in {1,...,3-|alpha|}.
class EmtTable {
 public:
  Vec2 at(MultiIndex alpha, MultiIndex beta, int j) const;
  void set(MultiIndex alpha, MultiIndex beta, int j, const Vec2& v);
  bool has(MultiIndex alpha, MultiIndex beta, int j) const;

  const ContrastPair& pair() const { return pair_; }
  const Curve& reference() const { return reference_; }
  int resolution() const { return n_; }

  friend EmtTable compute_emt(const ContrastPair&, const BoundaryGrid&, Exec);

 private:
  using Key = std::array<int, 5>;  // a1 a2 b1 b2 j
  std::map<Key, Vec2> values_;
  ContrastPair pair_;
  Curve reference_;
  int n_ = 0;
};

EmtTable compute_emt(const ContrastPair& pair, const BoundaryGrid& b,
                     Exec exec = Exec::parallel);

/// First-order block arranged as a 4-index array: m[i][j][p][q] with
/// alpha = e_i, beta = e_q and vector component p.
using EmtTensor = std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2>;

EmtTensor emt_as_tensor(const EmtTable& table);

/// One record per (alpha, beta, j, p), 17 significant digits.
void write_emt_table(const EmtTable& table, std::ostream& os);

}  // namespace ebi
