#pragma once

#include <json.hpp>

#include "motivecalc/formulas.hpp"
#include "motivecalc/realize.hpp"
#include "motivecalc/wallcross.hpp"
#include "motivecalc/weights.hpp"

namespace motivecalc {

using Json = nlohmann::json;

// {"kind":"SymC","n":3}; parameter key depends on the kind.
Json atom_to_json(const MotiveAtom& a);
MotiveAtom atom_from_json(const Json& j);

// {"terms":[{"atoms":[...],"twist":2,"coeff":1},...]} in normal-form order.
Json motive_to_json(const MotiveExpr& e);
MotiveExpr motive_from_json(const Json& j);

// Ascending coefficient array; coefficients that exceed 64 bits serialize as
// decimal strings.
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

// Arrays of "p/q" strings in lowest terms.
Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

// {"s":0,"I":[1,2],"parity":"odd"}
Json wall_to_json(const Wall& w, long N);
Wall wall_from_json(const Json& j);

// Ordered by t; each record carries the wall, direction, and the centre
// summands the crossing adds or removes.
Json crossings_to_json(const std::vector<Crossing>& cs, long g, long N,
                       bool fixed_det);

Json exponent_table_to_json(const ExponentTable& t);

Json bb_component_to_json(const BBComponent& c);

Json chow_to_json(const ChowDecomposition& d);

// {"1":[1,4,1], ...}: Betti coefficient rows for ~Sym^n(C), keyed by n.
TildeSymBettiTable betti_table_from_json(const Json& j);

}  // namespace motivecalc
