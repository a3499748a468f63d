#pragma once

// JSON forms of the library's values. Coefficients are numbers when they
// fit in 64 bits and decimal strings otherwise; exact rationals are "p/q".
// Keys keep insertion order so identical inputs give identical bytes.

#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "hrp/digitset.hpp"
#include "hrp/expander.hpp"
#include "hrp/places.hpp"
#include "hrp/verify.hpp"

namespace hrp {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& z);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

// Plain coefficient array.
Json coeffs_json(const IntPoly& p);
// {"coeffs": [...]}
Json intpoly_json(const IntPoly& p);
// Accepts a plain array or {"coeffs": [...]}.
IntPoly intpoly_from_json(const Json& j);

Json minpoly_json(const MinPoly& m);
MinPoly minpoly_from_json(const Json& j);

// {"center": ["re", "im"], "radius": "r"}
Json ball_json(const ComplexBall& b, int digits = 40);
Json field_elem_json(const FieldElem& x);

Json classification_json(const AlgebraicNumber& a, const Classification& c);

Json digit_set_json(const DigitSet& F);
// Every stored digit is re-certified against `emb`; a stored coset or
// orthant that disagrees is an InputError.
DigitSet digit_set_from_json(const Json& j, const Embedder& emb);

Json trace_json(const ExpansionTrace& t, const DigitSet& F, const AuditReport& audit);
// Inverse of trace_json for the fields audit_trace needs.
ExpansionTrace trace_from_json(const Json& j);

Json attractor_json(const Attractor& A, const MinPoly& m, const SeedBox& box, long max_steps);
Json coverage_json(const CoverageReport& r, const MinPoly& m);

std::string dump(const Json& j);

}  // namespace hrp
