#pragma once

#include <json.hpp>

#include "bimahonian/characters.hpp"
#include "bimahonian/cyclotomic.hpp"
#include "bimahonian/poly.hpp"
#include "bimahonian/sieving.hpp"
#include "bimahonian/tableaux.hpp"
#include "bimahonian/wreath.hpp"

namespace bimahonian {

using Json = nlohmann::ordered_json;

/// {"m": m, "coeffs": ["p/q", ...]}
Json cyclo_to_json(const CycloNum& x);
CycloNum cyclo_from_json(const Json& j);

/// {"vars": ["t","q"], "terms": [[i, j, coeff], ...]} in lexicographic order.
/// Rational coefficients are strings; others are CycloNum objects.
Json poly_to_json(const BiPoly& p);
BiPoly poly_from_json(const Json& j);

/// [lambda^{d-1}, ..., lambda^0]
Json shape_to_json(const MultiPartition& shape);
MultiPartition shape_from_json(const Json& j);

/// Components in the same order as shapes, each a list of rows.
Json tableau_to_json(const SkewTableau& t);

Json certificate_to_json(const RegularCertificate& cert);
Json bicsp_report_to_json(const BiCSPReport& rep);
Json class_function_to_json(const ClassFunction& f);

/// P, Q, the common shape and Des/maj/fmaj of w, P and Q.
Json rsk_to_json(const WreathElem& w);

}  // namespace bimahonian
