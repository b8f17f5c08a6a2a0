#include "nct/oracle_rep.hpp"

#include <cmath>
#include <numeric>

namespace nct {

MatrixRep build_matrix_rep(int p, int q) {
  if (q < 2) throw Error("matrix representation needs q >= 2");
  if (std::gcd(std::abs(p), q) != 1) throw Error("p and q must be coprime");
  MatrixRep rep;
  rep.p = p;
  rep.q = q;
  rep.u1 = Eigen::MatrixXcd::Zero(q, q);
  rep.u2 = Eigen::MatrixXcd::Zero(q, q);
  for (int k = 0; k < q; ++k) {
    rep.u1(k, k) = std::polar(1.0, 2.0 * M_PI * p * k / q);
    rep.u2((k + 1) % q, k) = 1.0;
  }
  return rep;
}

namespace {

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& u, int e) {
  const int q = static_cast<int>(u.rows());
  if (e == 0) return Eigen::MatrixXcd::Identity(q, q);
  const Eigen::MatrixXcd base = e > 0 ? u : Eigen::MatrixXcd(u.adjoint());
  Eigen::MatrixXcd out = base;
  for (int i = 1; i < std::abs(e); ++i) out = out * base;
  return out;
}

}  // namespace

Eigen::MatrixXcd represent_at(const Element& a, const MatrixRep& rep) {
  if (a.context()->dim() != 2)
    throw Error("matrix representation is only defined for n = 2");
  const int q = rep.q;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(q, q);
  for (const auto& [m, c] : a.coeffs())
    out += c * (matrix_power(rep.u1, m[0]) * matrix_power(rep.u2, m[1]));
  return out;
}

Eigen::MatrixXcd represent(const Element& a, const MatrixRep& rep) {
  const double theta = a.context()->theta(0, 1);
  if (std::abs(theta - rep.theta()) > 1e-9)
    throw Error("context theta does not match the representation");
  return represent_at(a, rep);
}

std::pair<int, int> rational_approx(double theta, int max_q) {
  int best_p = 0, best_q = 1;
  double best_err = std::abs(theta);
  for (int q = 1; q <= max_q; ++q) {
    const int p = static_cast<int>(std::lround(theta * q));
    const double err = std::abs(theta - static_cast<double>(p) / q);
    if (err < best_err && std::gcd(std::abs(p), q) == 1) {
      best_err = err;
      best_p = p;
      best_q = q;
    }
  }
  if (best_q == 1 && best_p == 0 && std::abs(theta) > 0.5)
    best_p = static_cast<int>(std::lround(theta));
  return {best_p, best_q};
}

}  // namespace nct
