#pragma once

#include "arithjet/base_ring.hpp"
#include "arithjet/characters.hpp"
#include "arithjet/delta_ring.hpp"
#include "arithjet/jet.hpp"
#include "arithjet/poly.hpp"

#include <json.hpp>

namespace arithjet {

using njson = nlohmann::json;

// {p, f, N, coeffs: ["...", ...]} with decimal-string coefficients
njson base_elem_to_json(const BaseElem& e);
BaseElem base_elem_from_json(const njson& j);

// {"terms": [{"e": [..], "c": "dec"}, ...]}
njson int_poly_to_json(const MPoly<BigInt>& p);
MPoly<BigInt> int_poly_from_json(const njson& j, int nvars);

// series terms as [{"monomial": {"q": e0, "q1": e1, ...}, "coeff": "dec"}]
// restricted to the complete range and reduced mod p^N
njson delta_series_to_json(const DeltaSeries& s);

njson jet_presentation_to_json(const JetPresentation<BigInt>& J);
AffinePresentation<BigInt> affine_presentation_from_json(const njson& j, int64_t p, int f);

njson kummer_jet_to_json(const KummerJet& K);

njson delta_axiom_report_to_json(const DeltaAxiomReport& r);

}  // namespace arithjet
