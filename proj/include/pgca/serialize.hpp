#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pgca/degree.hpp"
#include "pgca/omega.hpp"
#include "pgca/tensor.hpp"
#include "pgca/twist.hpp"
#include "pgca/whittaker.hpp"

namespace pgca {

using Json = nlohmann::json;

/// Throws ConfigError naming the first key of `obj` not in `allowed`.
void require_keys(const Json& obj, std::initializer_list<std::string_view> allowed, std::string_view where);

Json to_json(const Scalar& s);
/// Accepts the string serialization or a JSON integer.
Scalar scalar_from_json(const Json& j);

/// [{"xexp": a, "yexp": b, "coeff": "c"}, ...] in ascending monomial order.
Json to_json(const BivariatePolynomial& p);
/// The list form above, or a bare scalar for a constant.
BivariatePolynomial polynomial_from_json(const Json& j);

Json to_json(const OmegaSpec& spec);
OmegaSpec omega_spec_from_json(const Json& j);

/// {"m", "n", "values": {"I[1]": "1", ...}, "centrals": {"c1": ..}}
Json to_json(const WhittakerDatum& d);
WhittakerDatum datum_from_json(const Json& j);

/// [{"monomial": "J[1] I[0]", "coeff": "1"}, ...] in canonical order.
Json to_json(const EnvelopingElement& v);
/// Also accepts an object {"J[1] I[0]": "1", ...}; monomials are straightened.
EnvelopingElement enveloping_from_json(const Json& j);

Json to_json(const AlgebraElement& x);
Json to_json(const ScalarMatrix& m);
Json to_json(const ScalarVector& v);
Json to_json(const ExponentVector& e);
Json to_json(const DegreePair& d);
Json to_json(const TensorVector& t);

Json to_json(const SearchReport& r);
Json to_json(const TwistResult& r);
Json to_json(const ClosureReport& r);
Json to_json(const DegreeReductionReport& r);
Json to_json(const TensorProbeReport& r);

}  // namespace pgca
