#pragma once

#include <Eigen/Dense>

#include "nct/element.hpp"

namespace nct {

/// Clock-and-shift representation of the n = 2 torus relations at rational
/// theta = p/q: U1 = diag(1, w, ..., w^{q-1}) with w = e^{2 pi i p/q}, U2 =
/// the cyclic shift, so U1 U2 = e^{2 pi i p/q} U2 U1.
struct MatrixRep {
  int p = 0;
  int q = 0;
  Eigen::MatrixXcd u1;
  Eigen::MatrixXcd u2;

  double theta() const { return static_cast<double>(p) / q; }
};

/// Requires gcd(p, q) = 1 and q >= 2.
MatrixRep build_matrix_rep(int p, int q);

/// Image of a under the representation: monomials map to normal-ordered
/// matrix products U1^{m1} U2^{m2}. Requires the context theta to match p/q
/// (within 1e-9); use represent_at for a deliberately mismatched theta.
Eigen::MatrixXcd represent(const Element& a, const MatrixRep& rep);

/// Same map without the theta check, for heuristic use at a rational
/// approximation of an irrational theta.
Eigen::MatrixXcd represent_at(const Element& a, const MatrixRep& rep);

/// Best rational approximation p/q of theta with 1 <= q <= max_q.
std::pair<int, int> rational_approx(double theta, int max_q);

}  // namespace nct
