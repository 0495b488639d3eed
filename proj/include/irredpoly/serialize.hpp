// JSON forms of the public data types (see README for the schemas).
#pragma once

#include <json.hpp>

#include "irredpoly/criteria.hpp"
#include "irredpoly/decomp.hpp"
#include "irredpoly/geometry.hpp"
#include "irredpoly/poly.hpp"

namespace irredpoly {

using Json = nlohmann::json;

// {"dim": n, "vertices": [[int,...],...]} with vertices sorted lex.
Json polytope_to_json(const IntegralPolytope& pt);
IntegralPolytope polytope_from_json(const Json& j);

Json split_to_json(const SplitDecomposition& s);

Json certificate_to_json(const IrreducibilityCertificate& cert);
// Rebuilds a certificate; when p is given the split parts are restored
// from it, which recheck_certificate needs.
IrreducibilityCertificate certificate_from_json(const Json& j, const Polynomial* p = nullptr);

Json decomposition_to_json(const DecompositionResult& r);

}  // namespace irredpoly
