#pragma once

#include <complex>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace nct {

using Complex = std::complex<double>;

/// Fourier exponent of a monomial U^m = U_1^{m_1} ... U_n^{m_n}.
using MultiIndex = std::vector<int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContextMismatch : Error {
  ContextMismatch() : Error("context mismatch") {}
};
struct SupportOverflow : Error {
  using Error::Error;
};
struct NotSelfAdjoint : Error {
  using Error::Error;
};
struct NotInvertible : Error {
  using Error::Error;
};
struct InversionFailure : Error {
  using Error::Error;
};
struct TruncationBudget : Error {
  using Error::Error;
};

enum class TruncationPolicy { Project, Strict };

class TorusContext;
using ContextPtr = std::shared_ptr<const TorusContext>;

/// Shared parameters of one noncommutative torus A_Theta: dimension,
/// deformation matrix, support cutoffs and tolerances. All elements of a
/// computation reference a single context.
class TorusContext {
 public:
  /// Coefficients with modulus below this are dropped after every operation.
  static constexpr double kDropThreshold = 1e-15;

  /// theta is row-major n*n, must be skew-symmetric with zero diagonal.
  /// working_cutoff < 0 means the default 2*cutoff.
  static ContextPtr make(int n, const std::vector<double>& theta, int cutoff,
                         int working_cutoff = -1, double tol = 1e-9,
                         TruncationPolicy policy = TruncationPolicy::Project);

  /// The n = 2 case: Theta = [[0, theta], [-theta, 0]].
  static ContextPtr make2d(double theta, int cutoff, int working_cutoff = -1,
                           double tol = 1e-9,
                           TruncationPolicy policy = TruncationPolicy::Project);

  int dim() const { return n_; }
  double theta(int j, int k) const { return theta_[j * n_ + k]; }
  const std::vector<double>& theta_flat() const { return theta_; }
  int cutoff() const { return cutoff_; }
  int working_cutoff() const { return working_cutoff_; }
  double tol() const { return tol_; }
  TruncationPolicy policy() const { return policy_; }

  bool in_box(const MultiIndex& m, int box) const;
  bool in_working_box(const MultiIndex& m) const {
    return in_box(m, working_cutoff_);
  }

  /// Phase of U^m U^p = phi(m, p) U^{m+p} under normal ordering
  /// U_1^{..} ... U_n^{..}: phi = exp(2 pi i sum_{k>j} Theta_{kj} m_k p_j).
  Complex product_phase(const MultiIndex& m, const MultiIndex& p) const;

  /// Phase of (U^m)* = psi(m) U^{-m}: psi = exp(2 pi i sum_{k>j} Theta_{kj} m_k m_j).
  Complex star_phase(const MultiIndex& m) const;

  /// l1 mass removed by projections under the Project policy, accumulated
  /// across all operations on elements of this context.
  void note_tail(double mass) const;
  double tail_consumed() const;
  void reset_tail() const;

  TorusContext(int n, std::vector<double> theta, int cutoff, int working_cutoff,
               double tol, TruncationPolicy policy);

 private:
  int n_;
  std::vector<double> theta_;
  int cutoff_;
  int working_cutoff_;
  double tol_;
  TruncationPolicy policy_;
  mutable std::mutex tail_mutex_;
  mutable double tail_ = 0.0;
};

}  // namespace nct
