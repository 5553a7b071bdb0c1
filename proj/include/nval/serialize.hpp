#pragma once

// JSON exchange format for polynomials and sigma-expansions:
//   {"vars": ["z","x1"], "terms": [{"exp": [2,0], "coeff": "-10"}, ...]}
// Terms are emitted in graded-lex order (the polynomial's own term order),
// exponent vectors padded to the table width, coefficients as decimal
// strings so arbitrary precision survives the round trip.

#include <nlohmann/json.hpp>

#include "nval/polynomial.hpp"
#include "nval/sym.hpp"

namespace nval {

using Json = nlohmann::ordered_json;

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"arity": 2, "terms": [{"exp": [3,0], "coeff": "1"}, ...]} in the
// expansion's descending-lex tuple order.
Json to_json(const SymExpansion& e);
SymExpansion sym_expansion_from_json(const Json& j);

}  // namespace nval
