#pragma once

#include "nct/calculus.hpp"

namespace nct {

/// Closed-form R_{1,2,1,2} for the conformal metric e^h delta_{jk} on the
/// 2-torus: with k_j = d_j(e^h) e^{-h}, returns
/// -1/2 (d_2(k_2) + d_1(k_1)) e^h. Bypasses the Levi-Civita solver; built
/// from algebra operations only.
Element conformal_closed_form(const Element& h);

}  // namespace nct
