#pragma once

#include <json.hpp>

#include "heisverma/branching.hpp"
#include "heisverma/lie.hpp"
#include "heisverma/param_scalar.hpp"
#include "heisverma/pbw.hpp"
#include "heisverma/rational.hpp"
#include "heisverma/weyl.hpp"

namespace heisverma {

using Json = nlohmann::ordered_json;

/// Version of the report layout emitted by the command line tool.
inline constexpr int kSchemaVersion = 1;

// Scalars are strings ("-1/2", "l1+l2+4") so that big numbers survive.
Json to_json(const Rational& x);
Json to_json(const ParamScalar& x);
/// {"n", "side", "terms": [[exponent], "coeff"]...} in descending term order.
Json to_json(const PolyVector& p);
/// {"n", "side", "terms": [[alpha], [beta], "coeff"]...}.
Json to_json(const WeylElement& w);
/// {"n", "terms": [[f exponents], [g exponents], c exponent, "coeff"]...}.
Json to_json(const PbwVector& v);
/// {"kind": "f", "i": 1}; hmat carries "matrix" as rows of strings.
Json to_json(const LieBasisElement& x);
Json to_json(const ComponentDescriptor& c);

// Inverses. All throw std::invalid_argument on malformed input.
Rational rational_from_json(const Json& j);
ParamScalar param_from_json(const Json& j);
PolyVector poly_from_json(const Json& j);
WeylElement weyl_from_json(const Json& j);
PbwVector pbw_from_json(const Json& j);
LieBasisElement lie_from_json(const Json& j);

}  // namespace heisverma
