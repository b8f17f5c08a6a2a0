#include "nct/io.hpp"

#include <cstdio>
#include <string>

namespace nct {

Json element_to_json(const Element& a) {
  Json out = Json::array();
  for (const auto& [m, c] : a.coeffs()) {
    Json rec;
    rec["m"] = m;
    rec["re"] = c.real();
    rec["im"] = c.imag();
    out.push_back(std::move(rec));
  }
  return out;
}

Element element_from_json(const ContextPtr& ctx, const Json& j) {
  if (!j.is_array()) throw Error("element JSON must be an array");
  Element out = Element::zero(ctx);
  for (const Json& rec : j) {
    if (!rec.contains("m")) throw Error("element record missing 'm'");
    const MultiIndex m = rec.at("m").get<MultiIndex>();
    const double re = rec.value("re", 0.0);
    const double im = rec.value("im", 0.0);
    out = out + Element::monomial(ctx, m, Complex(re, im));
  }
  return out;
}

namespace {

std::string key2(const char* base, int j, int k) {
  return std::string(base) + "[" + std::to_string(j + 1) + "][" +
         std::to_string(k + 1) + "]";
}

}  // namespace

Json metric_to_json(const Metric& g) {
  Json out;
  for (int j = 0; j < g.dim(); ++j)
    for (int k = 0; k < g.dim(); ++k)
      out[key2("g", j, k)] = element_to_json(g.at(j, k));
  return out;
}

Json connection_to_json(const Connection& c) {
  Json out;
  for (int j = 0; j < c.dim(); ++j)
    for (int k = 0; k < c.dim(); ++k)
      for (int p = 0; p < c.dim(); ++p)
        out[key2("Gamma", j, k) + "[" + std::to_string(p + 1) + "]"] =
            element_to_json(c.christoffel(j, k).coeff(p));
  return out;
}

Json curvature_to_json(const CurvatureTensor& r) {
  Json out;
  for (int j = 0; j < r.dim(); ++j)
    for (int k = 0; k < r.dim(); ++k)
      for (int l = 0; l < r.dim(); ++l)
        for (int m = 0; m < r.dim(); ++m)
          out[key2("R", j, k) + "[" + std::to_string(l + 1) + "][" +
              std::to_string(m + 1) + "]"] =
              element_to_json(r.at(j, k, l, m));
  return out;
}

Json residuals_to_json(const ResidualReport& r) {
  Json out;
  for (const auto& [name, v] : r.as_map()) out[name] = v;
  return out;
}

std::string grid_to_csv(const GridFunction& g) {
  std::string out = "x1,x2,re,im\n";
  char buf[128];
  for (int p = 0; p < g.size; ++p) {
    for (int q = 0; q < g.size; ++q) {
      const Complex v = g.at(p, q);
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n",
                    static_cast<double>(p) / g.size,
                    static_cast<double>(q) / g.size, v.real(), v.imag());
      out += buf;
    }
  }
  return out;
}

}  // namespace nct
