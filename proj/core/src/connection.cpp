#include "nct/connection.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

namespace nct {

AlgebraMatrix::AlgebraMatrix(const ContextPtr& ctx, int n)
    : ctx_(ctx), n_(n), entries_(n * n, Element::zero(ctx)) {}

AlgebraMatrix AlgebraMatrix::identity(const ContextPtr& ctx, int n) {
  AlgebraMatrix out(ctx, n);
  for (int j = 0; j < n; ++j) out.at(j, j) = Element::one(ctx);
  return out;
}

AlgebraMatrix AlgebraMatrix::from_metric(const Metric& g) {
  AlgebraMatrix out(g.context(), g.dim());
  for (int j = 0; j < g.dim(); ++j)
    for (int k = 0; k < g.dim(); ++k) out.at(j, k) = g.at(j, k);
  return out;
}

AlgebraMatrix AlgebraMatrix::operator+(const AlgebraMatrix& rhs) const {
  AlgebraMatrix out(ctx_, n_);
  for (int i = 0; i < n_ * n_; ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

AlgebraMatrix AlgebraMatrix::operator-(const AlgebraMatrix& rhs) const {
  AlgebraMatrix out(ctx_, n_);
  for (int i = 0; i < n_ * n_; ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

AlgebraMatrix AlgebraMatrix::operator*(const AlgebraMatrix& rhs) const {
  AlgebraMatrix out(ctx_, n_);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) {
      Element acc = Element::zero(ctx_);
      for (int p = 0; p < n_; ++p) acc = acc + at(j, p) * rhs.at(p, k);
      out.at(j, k) = std::move(acc);
    }
  return out;
}

AlgebraMatrix AlgebraMatrix::operator*(Complex s) const {
  AlgebraMatrix out(ctx_, n_);
  for (int i = 0; i < n_ * n_; ++i) out.entries_[i] = entries_[i] * s;
  return out;
}

AlgebraMatrix AlgebraMatrix::adjoint() const {
  AlgebraMatrix out(ctx_, n_);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) out.at(j, k) = star(at(k, j));
  return out;
}

double AlgebraMatrix::block_norm() const {
  double best = 0.0;
  for (int j = 0; j < n_; ++j) {
    double row = 0.0;
    for (int k = 0; k < n_; ++k) row += norm_l1(at(j, k));
    best = std::max(best, row);
  }
  return best;
}

AlgebraMatrix newton_schulz_inverse(const AlgebraMatrix& g, double tol,
                                    int max_iter) {
  const ContextPtr& ctx = g.context();
  const int n = g.size();

  Eigen::MatrixXcd tau(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) tau(j, k) = trace(g.at(j, k));
  const Eigen::FullPivLU<Eigen::MatrixXcd> lu(tau);
  if (!lu.isInvertible())
    throw InversionFailure("metric inversion failed: tau(G) is singular");
  const Eigen::MatrixXcd tau_inv = lu.inverse();

  AlgebraMatrix x(ctx, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) x.at(j, k) = Element::scalar(ctx, tau_inv(j, k));

  const AlgebraMatrix id = AlgebraMatrix::identity(ctx, n);
  double res = (id - g * x).block_norm();
  if (res >= 1.0) {
    // Constant seed is outside the l1 contraction region; use G*/||G||^2.
    const double ng = g.block_norm();
    x = g.adjoint() * Complex(1.0 / (ng * ng));
    res = (id - g * x).block_norm();
  }

  int it = 0;
  for (; it < max_iter && res > tol; ++it) {
    x = x * (id * Complex(2.0) - g * x);
    const double next = (id - g * x).block_norm();
    if (next > 1e8)
      throw InversionFailure("metric inversion failed: residual diverged");
    res = next;
  }
  if (res > tol)
    throw InversionFailure("metric inversion failed: residual " +
                           std::to_string(res) + " after iteration cap");
  // Polish toward the rounding/truncation floor: consumers differentiate the
  // Christoffel data, which amplifies the inversion residual by O(cutoff)
  // factors of 2 pi m.
  for (; it < max_iter; ++it) {
    const AlgebraMatrix cand = x * (id * Complex(2.0) - g * x);
    const double next = (id - g * cand).block_norm();
    if (next >= 0.5 * res) break;
    x = cand;
    res = next;
  }
  return x;
}

Connection::Connection(const ContextPtr& ctx,
                       std::vector<VectorField> christoffel)
    : ctx_(ctx), christoffel_(std::move(christoffel)) {
  const int n = ctx->dim();
  if (static_cast<int>(christoffel_.size()) != n * n)
    throw Error("connection needs n*n Christoffel fields");
}

Connection Connection::flat(const ContextPtr& ctx) {
  const int n = ctx->dim();
  return Connection(ctx,
                    std::vector<VectorField>(n * n, VectorField(ctx)));
}

Connection Connection::perturbed(int j, int k, int p,
                                 const Element& delta) const {
  std::vector<VectorField> fields = christoffel_;
  const int n = dim();
  std::vector<Element> coeffs = fields[j * n + k].coeffs();
  coeffs[p] = coeffs[p] + delta;
  fields[j * n + k] = VectorField(ctx_, std::move(coeffs));
  return Connection(ctx_, std::move(fields));
}

Connection levi_civita(const Metric& g) {
  const ContextPtr& ctx = g.context();
  const int n = g.dim();

  const MetricReport report = validate_metric(g);
  for (const char* name : {"self_adjoint", "symmetry", "tau_positive_definite"}) {
    const CheckResult* c = report.find(name);
    if (c != nullptr && !c->pass)
      throw Error(std::string("metric validation failed: ") + name);
  }

  const AlgebraMatrix ginv =
      newton_schulz_inverse(AlgebraMatrix::from_metric(g), ctx->tol());

  std::vector<VectorField> christoffel;
  christoffel.reserve(n * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // b_l = 1/2 [d_j g_{kl} + d_k g_{jl} - d_l g_{jk}]
      std::vector<Element> b;
      b.reserve(n);
      for (int l = 0; l < n; ++l) {
        b.push_back((derive(j, g.at(k, l)) + derive(k, g.at(j, l)) -
                     derive(l, g.at(j, k))) *
                    Complex(0.5));
      }
      // Solve row . G = b, i.e. row = b . G^{-1}.
      std::vector<Element> row;
      row.reserve(n);
      for (int p = 0; p < n; ++p) {
        Element acc = Element::zero(ctx);
        for (int l = 0; l < n; ++l) acc = acc + b[l] * ginv.at(l, p);
        row.push_back(std::move(acc));
      }
      christoffel.emplace_back(ctx, std::move(row));
    }
  }
  return Connection(ctx, std::move(christoffel));
}

VectorField connection_apply(const Connection& c, const Derivation& x,
                             const VectorField& y) {
  if (c.context() != x.context() || c.context() != y.context())
    throw ContextMismatch();
  const ContextPtr& ctx = c.context();
  const int n = c.dim();
  VectorField out(ctx);
  for (int k = 0; k < n; ++k) {
    const Element& bk = y.coeff(k);
    if (bk.is_zero()) continue;
    // X(b_k) d_k
    std::vector<Element> term(n, Element::zero(ctx));
    term[k] = derivation_apply(x, bk);
    out = out + VectorField(ctx, std::move(term));
    // b_k nabla_X d_k
    VectorField nabla_dk(ctx);
    for (int j = 0; j < n; ++j) {
      if (x.constant()[j] == Complex(0.0)) continue;
      nabla_dk = nabla_dk + c.christoffel(j, k) * x.constant()[j];
    }
    if (!x.inner_part().is_zero()) {
      std::vector<Element> inner_term(n, Element::zero(ctx));
      inner_term[k] = x.inner_part();
      nabla_dk = nabla_dk + VectorField(ctx, std::move(inner_term));
    }
    out = out + left_mul(bk, nabla_dk);
  }
  return out;
}

}  // namespace nct
