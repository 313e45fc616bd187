#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "majdist/closed_forms.hpp"
#include "majdist/qpoly.hpp"
#include "majdist/tableaux.hpp"
#include "majdist/verify.hpp"

namespace majdist {

// Keys keep insertion order so documents are stable byte for byte.
using Json = nlohmann::ordered_json;

// {"coeffs": ["c0", "c1", ...]} with decimal-string coefficients.
Json to_json(const QPoly& p);
// Inverse of to_json(QPoly). Throws DomainError on malformed input.
QPoly qpoly_from_json(const Json& j);

// {"shape": "...", "by_descents": {"i": poly}, "total": poly}
Json to_json(const DescentDistribution& d);

Json to_json(const FormulaResult& r);
Json to_json(const Finding& f);
Json to_json(const Report& r);

// Header plus one row per finding:
// suite_id,shape,params,label,equal,property_ok,darga,unimodal,symmetric
std::string report_csv(const Report& r, bool header = true);

}  // namespace majdist
