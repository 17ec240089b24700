#pragma once

#include <string>

#include "fanomut/bridge.hpp"
#include "fanomut/highdim.hpp"
#include "json.hpp"

namespace fanomut {

using Json = nlohmann::json;

/// Parses text; malformed input throws Parse.
Json parse_json(const std::string& text);

// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise. Rationals with denominator 1 are integers, else "p/q" strings.
// Floats are rejected everywhere.
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);

Json to_json(const FanoPolytope& p);
FanoPolytope fano_from_json(const Json& j);

Json to_json(const RationalPolytope& p);
RationalPolytope rational_polytope_from_json(const Json& j);

Json to_json(const LaurentPolynomial& w);
LaurentPolynomial laurent_from_json(const Json& j);

Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json to_json(const MutationData& d);
MutationData mutation_data_from_json(const Json& j);

Json to_json(const CompatibleCollection& e);
CompatibleCollection collection_from_json(const Json& j);

Json to_json(const SingularityContent& s);
Json to_json(const MutationGraph& g);
Json to_json(const FiniteTypeReport& r);
Json to_json(const ExchangeGraph& g);

std::string to_dot(const MutationGraph& g);
std::string to_dot(const Quiver& q);
std::string to_dot(const ExchangeGraph& g);

/// Drawing of a polygon with its lattice points, 40 units per lattice step.
std::string to_svg(const FanoPolytope& p);

}  // namespace fanomut
