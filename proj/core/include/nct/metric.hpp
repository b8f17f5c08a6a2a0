#pragma once

#include <string>
#include <vector>

#include "nct/fields.hpp"

namespace nct {

/// Riemannian metric on the module of vector fields, stored as the n x n
/// matrix g_{jk} = <d_j, d_k> of algebra elements.
class Metric {
 public:
  Metric(const ContextPtr& ctx, std::vector<Element> entries);

  static Metric flat(const ContextPtr& ctx);
  /// g_{jk} = w * delta_{jk}; w is expected to be positive (e.g. e^h).
  static Metric conformal(const Element& w);

  const ContextPtr& context() const { return ctx_; }
  int dim() const { return ctx_->dim(); }
  const Element& at(int j, int k) const { return entries_[j * dim() + k]; }

 private:
  ContextPtr ctx_;
  std::vector<Element> entries_;  // row-major n*n
};

/// <X, Y> = sum_{j,k} X_j g_{jk} (Y_k)*.
Element metric_pairing(const Metric& g, const VectorField& X,
                       const VectorField& Y);

struct CheckResult {
  std::string name;
  bool pass;
  double residual;
};

struct MetricReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
};

/// Checks self-adjointness of each entry, symmetry g_{jk} = g_{kj},
/// positive-definiteness of the constant-mode matrix tau(g_{jk}), and (for
/// n = 2) a heuristic positivity check through the rational-theta matrix
/// representation. Reports, never throws.
MetricReport validate_metric(const Metric& g);

}  // namespace nct
