#pragma once

#include <vector>

#include "nct/element.hpp"

namespace nct {

/// Samples of a commutative (Theta = 0) element on the uniform M x M lattice
/// x = (p/M, q/M) in [0,1)^2.
struct GridFunction {
  int size = 0;
  std::vector<Complex> values;  // row-major, values[p * size + q]

  Complex at(int p, int q) const { return values[p * size + q]; }
};

/// Pointwise Fourier sum sum_m c_m e^{2 pi i m.x}. Requires n = 2 and
/// Theta = 0 (evaluation is representation-dependent otherwise).
GridFunction evaluate_grid(const Element& a, int size);

struct ClassicalCurvature {
  GridFunction gaussian;   // K = -1/2 e^{-h} Lap(h)
  GridFunction r1212;      // e^{2h} K
};

/// Classical-geometry oracle for the conformal metric e^h at Theta = 0.
/// The Laplacian is applied exactly in Fourier space (c_m -> -4 pi^2 |m|^2 c_m).
ClassicalCurvature classical_curvature(const Element& h, int size);

}  // namespace nct
