#include "nct/element.hpp"

#include <cmath>

namespace nct {

namespace {

void prune(Element::CoeffMap& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (std::abs(it->second) < TorusContext::kDropThreshold)
      it = m.erase(it);
    else
      ++it;
  }
}

}  // namespace

void Element::check_context(const Element& other) const {
  if (ctx_ != other.ctx_) throw ContextMismatch();
}

void Element::insert_term(const MultiIndex& m, Complex c) {
  auto [it, inserted] = coeffs_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

Element Element::monomial(const ContextPtr& ctx, const MultiIndex& m,
                          Complex c) {
  if (static_cast<int>(m.size()) != ctx->dim())
    throw Error("multi-index length does not match dimension");
  if (!ctx->in_working_box(m)) throw SupportOverflow("support overflow");
  Element e(ctx);
  if (std::abs(c) >= TorusContext::kDropThreshold) e.coeffs_[m] = c;
  return e;
}

Element Element::one(const ContextPtr& ctx) { return scalar(ctx, 1.0); }

Element Element::scalar(const ContextPtr& ctx, Complex lambda) {
  return monomial(ctx, MultiIndex(ctx->dim(), 0), lambda);
}

Element Element::generator(const ContextPtr& ctx, int j) {
  if (j < 0 || j >= ctx->dim()) throw Error("axis out of range");
  MultiIndex m(ctx->dim(), 0);
  m[j] = 1;
  return monomial(ctx, m, 1.0);
}

Complex Element::coeff(const MultiIndex& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

Element Element::operator+(const Element& rhs) const {
  check_context(rhs);
  Element out(ctx_);
  out.coeffs_ = coeffs_;
  for (const auto& [m, c] : rhs.coeffs_) out.insert_term(m, c);
  prune(out.coeffs_);
  return out;
}

Element Element::operator-(const Element& rhs) const {
  check_context(rhs);
  Element out(ctx_);
  out.coeffs_ = coeffs_;
  for (const auto& [m, c] : rhs.coeffs_) out.insert_term(m, -c);
  prune(out.coeffs_);
  return out;
}

Element Element::operator-() const {
  Element out(ctx_);
  for (const auto& [m, c] : coeffs_) out.coeffs_[m] = -c;
  return out;
}

Element Element::operator*(Complex s) const {
  Element out(ctx_);
  for (const auto& [m, c] : coeffs_) out.coeffs_[m] = c * s;
  prune(out.coeffs_);
  return out;
}

Element Element::operator*(const Element& rhs) const {
  check_context(rhs);
  const TorusContext& ctx = *ctx_;
  const int n = ctx.dim();
  Element out(ctx_);
  double tail = 0.0;
  MultiIndex sum(n);
  for (const auto& [m, cm] : coeffs_) {
    for (const auto& [p, cp] : rhs.coeffs_) {
      for (int i = 0; i < n; ++i) sum[i] = m[i] + p[i];
      const Complex c = cm * cp * ctx.product_phase(m, p);
      if (!ctx.in_working_box(sum)) {
        if (ctx.policy() == TruncationPolicy::Strict)
          throw SupportOverflow("product support exceeds working box");
        tail += std::abs(c);
        continue;
      }
      out.insert_term(sum, c);
    }
  }
  if (tail > 0.0) ctx.note_tail(tail);
  prune(out.coeffs_);
  return out;
}

Element linear_combine(std::span<const std::pair<Complex, Element>> terms) {
  if (terms.empty()) throw Error("linear_combine needs at least one term");
  Element out = Element::zero(terms.front().second.context());
  for (const auto& [s, e] : terms) out = out + e * s;
  return out;
}

Element star(const Element& a) {
  const TorusContext& ctx = *a.ctx_;
  Element out(a.ctx_);
  MultiIndex neg(ctx.dim());
  for (const auto& [m, c] : a.coeffs_) {
    for (int i = 0; i < ctx.dim(); ++i) neg[i] = -m[i];
    out.coeffs_[neg] = std::conj(c) * ctx.star_phase(m);
  }
  return out;
}

Element derive(int j, const Element& a) {
  const TorusContext& ctx = *a.ctx_;
  if (j < 0 || j >= ctx.dim()) throw Error("axis out of range");
  Element out(a.ctx_);
  for (const auto& [m, c] : a.coeffs_) {
    if (m[j] == 0) continue;
    out.coeffs_[m] = c * Complex(0.0, 2.0 * M_PI * m[j]);
  }
  return out;
}

Complex trace(const Element& a) {
  return a.coeff(MultiIndex(a.ctx_->dim(), 0));
}

double norm_l1(const Element& a) {
  double s = 0.0;
  for (const auto& [m, c] : a.coeffs_) s += std::abs(c);
  return s;
}

std::pair<Element, double> project(const Element& a, int box) {
  if (box > a.ctx_->working_cutoff())
    throw Error("projection box exceeds working cutoff");
  Element out(a.ctx_);
  double tail = 0.0;
  for (const auto& [m, c] : a.coeffs_) {
    if (a.ctx_->in_box(m, box))
      out.coeffs_[m] = c;
    else
      tail += std::abs(c);
  }
  return {out, tail};
}

Element commutator(const Element& a, const Element& b) {
  return a * b - b * a;
}

bool approx_equal(const Element& a, const Element& b, double tol) {
  return norm_l1(a - b) <= tol;
}

}  // namespace nct
