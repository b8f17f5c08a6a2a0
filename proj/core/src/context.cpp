#include "nct/context.hpp"

#include <cmath>
#include <cstdlib>

namespace nct {

TorusContext::TorusContext(int n, std::vector<double> theta, int cutoff,
                           int working_cutoff, double tol,
                           TruncationPolicy policy)
    : n_(n),
      theta_(std::move(theta)),
      cutoff_(cutoff),
      working_cutoff_(working_cutoff),
      tol_(tol),
      policy_(policy) {}

ContextPtr TorusContext::make(int n, const std::vector<double>& theta,
                              int cutoff, int working_cutoff, double tol,
                              TruncationPolicy policy) {
  if (n < 1) throw Error("dimension must be >= 1");
  if (static_cast<int>(theta.size()) != n * n)
    throw Error("theta must be an n x n matrix");
  for (int j = 0; j < n; ++j) {
    if (theta[j * n + j] != 0.0) throw Error("theta diagonal must be zero");
    for (int k = 0; k < n; ++k) {
      if (std::abs(theta[j * n + k] + theta[k * n + j]) > 1e-14)
        throw Error("theta not skew-symmetric");
    }
  }
  if (cutoff < 1) throw Error("cutoff must be >= 1");
  if (working_cutoff < 0) working_cutoff = 2 * cutoff;
  if (working_cutoff < cutoff) throw Error("working_cutoff must be >= cutoff");
  if (tol < 0) throw Error("tol must be nonnegative");
  return std::make_shared<const TorusContext>(n, theta, cutoff, working_cutoff,
                                              tol, policy);
}

ContextPtr TorusContext::make2d(double theta, int cutoff, int working_cutoff,
                                double tol, TruncationPolicy policy) {
  return make(2, {0.0, theta, -theta, 0.0}, cutoff, working_cutoff, tol,
              policy);
}

bool TorusContext::in_box(const MultiIndex& m, int box) const {
  for (int v : m)
    if (v < -box || v > box) return false;
  return true;
}

Complex TorusContext::product_phase(const MultiIndex& m,
                                    const MultiIndex& p) const {
  double arg = 0.0;
  for (int k = 1; k < n_; ++k)
    for (int j = 0; j < k; ++j)
      arg += theta(k, j) * static_cast<double>(m[k]) * p[j];
  if (arg == 0.0) return Complex(1.0, 0.0);
  return std::polar(1.0, 2.0 * M_PI * arg);
}

Complex TorusContext::star_phase(const MultiIndex& m) const {
  double arg = 0.0;
  for (int k = 1; k < n_; ++k)
    for (int j = 0; j < k; ++j)
      arg += theta(k, j) * static_cast<double>(m[k]) * m[j];
  if (arg == 0.0) return Complex(1.0, 0.0);
  return std::polar(1.0, 2.0 * M_PI * arg);
}

void TorusContext::note_tail(double mass) const {
  std::lock_guard<std::mutex> lock(tail_mutex_);
  tail_ += mass;
}

double TorusContext::tail_consumed() const {
  std::lock_guard<std::mutex> lock(tail_mutex_);
  return tail_;
}

void TorusContext::reset_tail() const {
  std::lock_guard<std::mutex> lock(tail_mutex_);
  tail_ = 0.0;
}

}  // namespace nct
