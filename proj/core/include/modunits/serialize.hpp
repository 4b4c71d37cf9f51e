#pragma once

#include <nlohmann/json.hpp>

#include "modunits/bivar_poly.hpp"
#include "modunits/curve_series.hpp"
#include "modunits/qseries.hpp"
#include "modunits/siegel.hpp"
#include "modunits/unit_lattice.hpp"

namespace modunits {

using Json = nlohmann::ordered_json;

// {"terms": [[degB, degC, "coeff"], ...]} in canonical term order.
Json to_json(const BivarPoly& f);
BivarPoly bivar_from_json(const Json& j);

// {"num": BivarPoly, "den": BivarPoly}
Json to_json(const RatPoly& f);

// {"denomN": N, "ord": o, "precN": p, "coeffs": ["num/den", ...]}
Json to_json(const QSeries& f);
QSeries qseries_from_json(const Json& j);

// {"ipow": i, "scalar": "r", "leadExp": "num/den", "fstar": QSeries}
Json to_json(const SiegelProduct& p);

// {"N": N, "e": [...]}
Json to_json(const ExpVector& e);
ExpVector expvector_from_json(const Json& j);

// {"N": N, "alpha": a, "beta": b, "pexp": [...]}
Json to_json(const PExpression& p);

// {"check", "N", "n"?, "precN", "pass", "firstFailingExponent"?, "verifiedTo"}
Json to_json(const CheckResult& r);

// Rational as "num/den" (integers as "num").
std::string rational_string(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

}  // namespace modunits
