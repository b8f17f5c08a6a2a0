#pragma once

#include <map>
#include <span>
#include <utility>

#include "nct/context.hpp"

namespace nct {

/// Finitely supported Fourier series sum_m c_m U^m on a noncommutative
/// torus. Immutable value type; all operations are pure.
class Element {
 public:
  using CoeffMap = std::map<MultiIndex, Complex>;

  explicit Element(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  /// c * U^m. Throws SupportOverflow if m is outside the working box.
  static Element monomial(const ContextPtr& ctx, const MultiIndex& m,
                          Complex c);
  static Element zero(const ContextPtr& ctx) { return Element(ctx); }
  static Element one(const ContextPtr& ctx);
  /// lambda * 1
  static Element scalar(const ContextPtr& ctx, Complex lambda);
  /// The generator U_j, 0-based axis.
  static Element generator(const ContextPtr& ctx, int j);

  const ContextPtr& context() const { return ctx_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Complex coeff(const MultiIndex& m) const;

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator-() const;
  Element operator*(const Element& rhs) const;  // twisted convolution
  Element operator*(Complex s) const;
  friend Element operator*(Complex s, const Element& a) { return a * s; }

  friend Element star(const Element& a);
  friend Element derive(int j, const Element& a);
  friend Complex trace(const Element& a);
  friend double norm_l1(const Element& a);
  friend std::pair<Element, double> project(const Element& a, int box);
  friend Element commutator(const Element& a, const Element& b);

 private:
  void insert_term(const MultiIndex& m, Complex c);
  void check_context(const Element& other) const;

  ContextPtr ctx_;
  CoeffMap coeffs_;
};

/// sum_i terms[i].first * terms[i].second; all elements must share a context.
Element linear_combine(std::span<const std::pair<Complex, Element>> terms);

/// (c U^m)* = conj(c) psi(m) U^{-m}, extended conjugate-linearly.
Element star(const Element& a);

/// Coefficient map c_m -> 2 pi i m_j c_m; 0-based axis.
Element derive(int j, const Element& a);

/// Constant Fourier mode c_0 (the canonical tracial state on polynomials).
Complex trace(const Element& a);

double norm_l1(const Element& a);

/// Zero coefficients outside [-box, box]^n; second member is the l1 mass
/// removed.
std::pair<Element, double> project(const Element& a, int box);

Element commutator(const Element& a, const Element& b);

bool approx_equal(const Element& a, const Element& b, double tol);

}  // namespace nct
