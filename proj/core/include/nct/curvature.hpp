#pragma once

#include <map>

#include "nct/calculus.hpp"
#include "nct/connection.hpp"

namespace nct {

/// All n^4 components R_{j,k,l,m} = <R(d_j, d_k) d_l, d_m>.
class CurvatureTensor {
 public:
  CurvatureTensor(const ContextPtr& ctx, std::vector<Element> components);

  const ContextPtr& context() const { return ctx_; }
  int dim() const { return ctx_->dim(); }
  const Element& at(int j, int k, int l, int m) const {
    const int n = dim();
    return components_[((j * n + k) * n + l) * n + m];
  }

 private:
  ContextPtr ctx_;
  std::vector<Element> components_;
};

/// R(X, Y) Z = (nabla_Y nabla_X - nabla_X nabla_Y + nabla_{[X,Y]}) Z.
VectorField curvature_operator(const Connection& c, const Derivation& x,
                               const Derivation& y, const VectorField& z);

/// Components on basis derivations (where the bracket term vanishes),
/// paired through the metric. Components are independent; `parallel`
/// computes them on multiple threads without changing the result.
CurvatureTensor curvature_tensor(const Connection& c, const Metric& g,
                                 bool parallel = false);

struct ResidualReport {
  double torsion = 0.0;
  double compatibility = 0.0;
  double pairing_self_adjoint = 0.0;
  double bianchi = 0.0;
  double antisymmetry = 0.0;
  double max = 0.0;

  std::map<std::string, double> as_map() const;
  /// Name of the largest residual.
  std::string worst() const;
};

/// l1 residuals of the identities a Levi-Civita connection must satisfy:
/// torsion Gamma[j][k] - Gamma[k][j], metric compatibility, self-adjointness
/// of <nabla_j d_k, d_l>, the Bianchi identity and first-pair antisymmetry
/// of R, each maximized over its index set.
ResidualReport identity_residuals(const Connection& c, const Metric& g,
                                  const CurvatureTensor& r);

struct GaussBonnetResult {
  Complex value;
  /// l1 error budget inherited from the two exponentials.
  double budget;
};

/// tau(R_{1,2,1,2} e^{-h}) for the conformal metric e^h delta_{jk} on the
/// 2-torus, through the full pipeline. Requires n = 2.
GaussBonnetResult gauss_bonnet(const Element& h);

}  // namespace nct
