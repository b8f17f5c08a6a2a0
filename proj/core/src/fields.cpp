#include "nct/fields.hpp"

namespace nct {

VectorField::VectorField(const ContextPtr& ctx, std::vector<Element> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ctx->dim())
    throw Error("vector field needs exactly n coefficients");
  for (const Element& e : coeffs_)
    if (e.context() != ctx_) throw ContextMismatch();
}

VectorField VectorField::basis(const ContextPtr& ctx, int j) {
  if (j < 0 || j >= ctx->dim()) throw Error("axis out of range");
  VectorField X(ctx);
  X.coeffs_[j] = Element::one(ctx);
  return X;
}

VectorField VectorField::operator+(const VectorField& rhs) const {
  if (ctx_ != rhs.ctx_) throw ContextMismatch();
  VectorField out(ctx_);
  for (int j = 0; j < dim(); ++j) out.coeffs_[j] = coeffs_[j] + rhs.coeffs_[j];
  return out;
}

VectorField VectorField::operator-(const VectorField& rhs) const {
  if (ctx_ != rhs.ctx_) throw ContextMismatch();
  VectorField out(ctx_);
  for (int j = 0; j < dim(); ++j) out.coeffs_[j] = coeffs_[j] - rhs.coeffs_[j];
  return out;
}

VectorField VectorField::operator-() const {
  VectorField out(ctx_);
  for (int j = 0; j < dim(); ++j) out.coeffs_[j] = -coeffs_[j];
  return out;
}

VectorField VectorField::operator*(Complex s) const {
  VectorField out(ctx_);
  for (int j = 0; j < dim(); ++j) out.coeffs_[j] = coeffs_[j] * s;
  return out;
}

VectorField left_mul(const Element& a, const VectorField& X) {
  if (a.context() != X.ctx_) throw ContextMismatch();
  VectorField out(X.ctx_);
  for (int j = 0; j < X.dim(); ++j) out.coeffs_[j] = a * X.coeffs_[j];
  return out;
}

bool VectorField::is_zero() const {
  for (const Element& e : coeffs_)
    if (!e.is_zero()) return false;
  return true;
}

double norm_l1(const VectorField& X) {
  double s = 0.0;
  for (int j = 0; j < X.dim(); ++j) s += norm_l1(X.coeff(j));
  return s;
}

Element vf_apply(const VectorField& X, const Element& a) {
  if (X.context() != a.context()) throw ContextMismatch();
  Element out = Element::zero(a.context());
  for (int j = 0; j < X.dim(); ++j) out = out + X.coeff(j) * derive(j, a);
  return out;
}

Derivation::Derivation(const ContextPtr& ctx, std::vector<Complex> constant,
                       const Element& inner)
    : ctx_(ctx), constant_(std::move(constant)), inner_(inner) {
  if (static_cast<int>(constant_.size()) != ctx->dim())
    throw Error("derivation needs exactly n constant coefficients");
  if (inner_.context() != ctx_) throw ContextMismatch();
  // Normalize the inner generator to trace zero.
  const Complex tau = trace(inner_);
  if (tau != Complex(0.0)) inner_ = inner_ - Element::scalar(ctx_, tau);
}

Derivation Derivation::basis(const ContextPtr& ctx, int j) {
  if (j < 0 || j >= ctx->dim()) throw Error("axis out of range");
  std::vector<Complex> c(ctx->dim(), 0.0);
  c[j] = 1.0;
  return Derivation(ctx, std::move(c), Element::zero(ctx));
}

Derivation Derivation::inner(const Element& a) {
  return Derivation(a.context(), std::vector<Complex>(a.context()->dim(), 0.0),
                    a);
}

Element derivation_apply(const Derivation& X, const Element& a) {
  if (X.context() != a.context()) throw ContextMismatch();
  Element out = Element::zero(a.context());
  for (int j = 0; j < a.context()->dim(); ++j) {
    if (X.constant()[j] == Complex(0.0)) continue;
    out = out + derive(j, a) * X.constant()[j];
  }
  if (!X.inner_part().is_zero()) out = out + commutator(X.inner_part(), a);
  return out;
}

Derivation derivation_bracket(const Derivation& X, const Derivation& Y) {
  if (X.context() != Y.context()) throw ContextMismatch();
  const ContextPtr& ctx = X.context();
  Element gen = Element::zero(ctx);
  for (int j = 0; j < ctx->dim(); ++j) {
    if (X.constant()[j] != Complex(0.0))
      gen = gen + derive(j, Y.inner_part()) * X.constant()[j];
    if (Y.constant()[j] != Complex(0.0))
      gen = gen - derive(j, X.inner_part()) * Y.constant()[j];
  }
  gen = gen + commutator(X.inner_part(), Y.inner_part());
  return Derivation(ctx, std::vector<Complex>(ctx->dim(), 0.0), gen);
}

}  // namespace nct
