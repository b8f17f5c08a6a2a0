#pragma once

#include "nct/metric.hpp"

namespace nct {

/// Square matrix over the algebra, used for the metric matrix G = (g_{jk})
/// and its iterative inverse.
class AlgebraMatrix {
 public:
  AlgebraMatrix(const ContextPtr& ctx, int n);

  static AlgebraMatrix identity(const ContextPtr& ctx, int n);
  static AlgebraMatrix from_metric(const Metric& g);

  int size() const { return n_; }
  const ContextPtr& context() const { return ctx_; }
  Element& at(int j, int k) { return entries_[j * n_ + k]; }
  const Element& at(int j, int k) const { return entries_[j * n_ + k]; }

  AlgebraMatrix operator+(const AlgebraMatrix& rhs) const;
  AlgebraMatrix operator-(const AlgebraMatrix& rhs) const;
  AlgebraMatrix operator*(const AlgebraMatrix& rhs) const;
  AlgebraMatrix operator*(Complex s) const;
  AlgebraMatrix adjoint() const;  // entrywise star, transposed

  /// Block l1 norm: max over rows of the sum of entry l1 norms
  /// (submultiplicative).
  double block_norm() const;

 private:
  ContextPtr ctx_;
  int n_;
  std::vector<Element> entries_;
};

/// Inverse of G by the Newton-Schulz iteration X <- X (2 I - G X), which
/// squares the residual I - G X each step. Seeded with the numeric inverse
/// of tau(G) embedded as constants; if that seed is outside the l1
/// convergence region, falls back to the hermitian seed G* / ||G||^2 whose
/// residual has spectral radius < 1 for positive G. Throws InversionFailure
/// if the residual does not reach `tol` within `max_iter` steps.
AlgebraMatrix newton_schulz_inverse(const AlgebraMatrix& g, double tol,
                                    int max_iter = 60);

/// A connection in terms of its Christoffel fields Gamma[j][k] = nabla_j d_k.
class Connection {
 public:
  Connection(const ContextPtr& ctx, std::vector<VectorField> christoffel);

  static Connection flat(const ContextPtr& ctx);

  const ContextPtr& context() const { return ctx_; }
  int dim() const { return ctx_->dim(); }
  const VectorField& christoffel(int j, int k) const {
    return christoffel_[j * dim() + k];
  }

  /// Returns a copy with `delta` added to coefficient `p` of Gamma[j][k];
  /// used by perturbation tests and the corruption-injection check mode.
  Connection perturbed(int j, int k, int p, const Element& delta) const;

 private:
  ContextPtr ctx_;
  std::vector<VectorField> christoffel_;
};

/// The Levi-Civita connection of g: for each (j,k) the pairings
/// <nabla_j d_k, d_l> = 1/2 [d_j g_{kl} + d_k g_{jl} - d_l g_{jk}] are
/// computed and the coefficient row solved by right-multiplying with the
/// Newton-Schulz inverse of G. Requires the exact metric checks to pass and
/// tau(G) to be nonsingular.
Connection levi_civita(const Metric& g);

/// nabla_X Y for a decomposed derivation X and Y = sum_k b_k d_k:
/// sum_k X(b_k) d_k + b_k (sum_j Xc_j Gamma[j][k] + X0 d_k).
VectorField connection_apply(const Connection& c, const Derivation& x,
                             const VectorField& y);

}  // namespace nct
