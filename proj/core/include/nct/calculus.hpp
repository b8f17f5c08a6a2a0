#pragma once

#include "nct/element.hpp"

namespace nct {

struct ExpResult {
  Element value;
  /// l1 bound on the error: Taylor remainder propagated through the
  /// squarings plus projection tails.
  double error_bound;
};

/// e^h for self-adjoint h, by scaling and squaring with a Taylor series
/// whose order is chosen from the remainder bound. Throws NotSelfAdjoint if
/// ||h - h*||_1 exceeds the context tolerance, TruncationBudget if the
/// accumulated projection tails exceed `budget`.
ExpResult exp_sa(const Element& h, double target = 1e-12,
                 double budget = 1e-6);

/// Neumann-series inverse. Requires tau(a) != 0 and ||1 - a/tau(a)||_1 < 1;
/// throws NotInvertible otherwise. For elements built as exp_sa(h), prefer
/// exp_sa(-h).
Element invert(const Element& a);

}  // namespace nct
