#pragma once

#include <json.hpp>

#include "cpold/chern.hpp"
#include "cpold/multipoly.hpp"
#include "cpold/partition.hpp"
#include "cpold/rational.hpp"
#include "cpold/rising.hpp"
#include "cpold/symfunc.hpp"
#include "cpold/unipoly.hpp"

namespace cpold::json {

using Json = nlohmann::ordered_json;

// Rational: "p/q" in lowest terms, or "p".
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// UniPoly: [[exponent, "p/q"], ...] in increasing exponent order.
Json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

// MultiPoly: [[[e1..en], "p/q"], ...]. The arity is needed to read the zero polynomial.
Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j, std::size_t num_vars);

// Partition: weakly decreasing integer array, validated on read.
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {basis, n, terms: [[partition, coeff], ...]}
Json to_json(const BasisExpansion<Rational>& e);
Json to_json(const BasisExpansion<UniPoly>& e);
BasisExpansion<Rational> rational_expansion_from_json(const Json& j);
BasisExpansion<UniPoly> poly_expansion_from_json(const Json& j);

// {params: [names], K: poly, table: [[E, m, poly], ...]}. Polynomials use the
// UniPoly form for one parameter and the MultiPoly form otherwise.
Json to_json(const RisingProductSpec& spec);
RisingProductSpec rising_spec_from_json(const Json& j);

// {n, k, basis, degree_bound, samples, terms}
Json to_json(const ChernPolynomial& p);
ChernPolynomial chern_polynomial_from_json(const Json& j);

}  // namespace cpold::json
