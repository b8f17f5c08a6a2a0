#pragma once

#include <vector>

#include "nct/element.hpp"

namespace nct {

/// Element of the free rank-n module of vector fields: sum_j a_j d_j with
/// algebra coefficients a_j.
class VectorField {
 public:
  explicit VectorField(const ContextPtr& ctx)
      : ctx_(ctx), coeffs_(ctx->dim(), Element::zero(ctx)) {}
  VectorField(const ContextPtr& ctx, std::vector<Element> coeffs);

  /// The basis field d_j (0-based).
  static VectorField basis(const ContextPtr& ctx, int j);

  const ContextPtr& context() const { return ctx_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  const Element& coeff(int j) const { return coeffs_[j]; }
  const std::vector<Element>& coeffs() const { return coeffs_; }

  VectorField operator+(const VectorField& rhs) const;
  VectorField operator-(const VectorField& rhs) const;
  VectorField operator-() const;
  VectorField operator*(Complex s) const;
  /// Left module action: (a X)_j = a X_j.
  friend VectorField left_mul(const Element& a, const VectorField& X);

  bool is_zero() const;

 private:
  ContextPtr ctx_;
  std::vector<Element> coeffs_;
};

double norm_l1(const VectorField& X);

/// X acting on a as a first-order differential operator:
/// sum_j X_j d_j(a). Not a derivation in general.
Element vf_apply(const VectorField& X, const Element& a);

/// A *-derivation in decomposed form: constant coefficients on the d_j plus
/// an inner part ad(a0) with tau(a0) = 0. The inner element is projected to
/// trace zero at construction.
class Derivation {
 public:
  Derivation(const ContextPtr& ctx, std::vector<Complex> constant,
             const Element& inner);

  /// The basis derivation d_j (0-based).
  static Derivation basis(const ContextPtr& ctx, int j);
  /// ad(a - tau(a)).
  static Derivation inner(const Element& a);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Complex>& constant() const { return constant_; }
  const Element& inner_part() const { return inner_; }

 private:
  ContextPtr ctx_;
  std::vector<Complex> constant_;
  Element inner_;
};

/// X(a) = sum_j c_j d_j(a) + [a0, a].
Element derivation_apply(const Derivation& X, const Element& a);

/// [X, Y]. The constant parts commute, so the bracket is purely inner with
/// generator sum_j Xc_j d_j(Y0) - sum_j Yc_j d_j(X0) + [X0, Y0] (trace zero).
Derivation derivation_bracket(const Derivation& X, const Derivation& Y);

}  // namespace nct
