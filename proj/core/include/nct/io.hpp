#pragma once

#include <nlohmann/json.hpp>

#include "nct/curvature.hpp"
#include "nct/oracle_grid.hpp"

namespace nct {

using Json = nlohmann::json;

/// Element wire format: array of {"m": [int,...], "re": f, "im": f},
/// ordered lexicographically by m.
Json element_to_json(const Element& a);
Element element_from_json(const ContextPtr& ctx, const Json& j);

/// Keys "g[j][k]", 1-based.
Json metric_to_json(const Metric& g);
/// Keys "Gamma[j][k][p]", 1-based.
Json connection_to_json(const Connection& c);
/// Keys "R[j][k][l][m]", 1-based.
Json curvature_to_json(const CurvatureTensor& r);

Json residuals_to_json(const ResidualReport& r);

/// CSV with columns x1, x2, re, im.
std::string grid_to_csv(const GridFunction& g);

}  // namespace nct
