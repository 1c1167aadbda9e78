#pragma once

#include <json.hpp>

#include "mouldkit/derivation.hpp"
#include "mouldkit/mould.hpp"
#include "mouldkit/qseries.hpp"

namespace mk {

using Json = nlohmann::json;

struct JsonFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// [{exps: [..], num: "..", den: ".."}, ...]
Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, int nvars);

// {num: poly, den: [factor, ...]}
Json to_json(const FormalFraction& f);
FormalFraction fraction_from_json(const Json& j, int nvars);

// {cap: R, values: {"r": value}}; a value may be a JSON polynomial, a fraction
// object or a canonical text string.
Json to_json(const PolyMould& m);
Json to_json(const RatMould& m);
PolyMould poly_mould_from_json(const Json& j);
RatMould rat_mould_from_json(const Json& j);

Json to_json(const NCPoly& p);    // {text, cap, terms: [{word, num, den}]}
NCPoly ncpoly_from_json(const Json& j);
Json to_json(const CPoly& p);     // {text, terms: [{mono, num, den}]}
CPoly cpoly_from_json(const Json& j);

Json to_json(const Derivation& D);  // {val_a, val_b, cap}
Derivation derivation_from_json(const Json& j);

Json to_json(const QSeriesL& s);  // {N, M, terms: [{n, m, num, den}]}

}  // namespace mk
