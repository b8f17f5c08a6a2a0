#include "nct/oracle_conformal.hpp"

namespace nct {

Element conformal_closed_form(const Element& h) {
  const ContextPtr& ctx = h.context();
  if (ctx->dim() != 2) throw Error("conformal closed form requires n = 2");
  const Element eh = exp_sa(h).value;
  const Element eh_inv = exp_sa(-h).value;
  const Element k1 = derive(0, eh) * eh_inv;
  const Element k2 = derive(1, eh) * eh_inv;
  return (derive(1, k2) + derive(0, k1)) * Complex(-0.5) * eh;
}

}  // namespace nct
