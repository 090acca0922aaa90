#include "cpold/serialize.hpp"

#include "cpold/error.hpp"

namespace cpold::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::invalid_input, "malformed JSON: " + what); }

void expect(bool ok, const std::string& what) {
  if (!ok) bad(what);
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(BigInt(j.get<long>()));
  expect(j.is_string(), "rational must be a string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_json(c)}));
  return out;
}

UniPoly unipoly_from_json(const Json& j) {
  expect(j.is_array(), "polynomial must be an array");
  UniPoly out;
  for (const auto& t : j) {
    expect(t.is_array() && t.size() == 2 && t[0].is_number_integer() && t[0].get<int>() >= 0, "polynomial term");
    out += UniPoly::monomial(t[0].get<int>(), rational_from_json(t[1]));
  }
  return out;
}

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({Json(e), to_json(c)}));
  return out;
}

MultiPoly multipoly_from_json(const Json& j, std::size_t num_vars) {
  expect(j.is_array(), "polynomial must be an array");
  MultiPoly out(num_vars);
  for (const auto& t : j) {
    expect(t.is_array() && t.size() == 2 && t[0].is_array(), "polynomial term");
    Exponent e;
    for (const auto& x : t[0]) {
      expect(x.is_number_integer() && x.get<int>() >= 0, "exponent entry");
      e.push_back(x.get<int>());
    }
    expect(e.size() == num_vars, "exponent arity");
    out += [&] {
      MultiPoly m(num_vars);
      m.add_term(e, rational_from_json(t[1]));
      return m;
    }();
  }
  return out;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  expect(j.is_array(), "partition must be an array");
  std::vector<int> parts;
  for (const auto& x : j) {
    expect(x.is_number_integer(), "partition entry");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

namespace {

template <class Coeff, class F>
Json expansion_to_json(const BasisExpansion<Coeff>& e, F&& coeff) {
  Json terms = Json::array();
  for (const auto& [index, c] : e.terms) terms.push_back(Json::array({to_json(index), coeff(c)}));
  return Json{{"basis", std::string(to_string(e.basis))}, {"n", e.num_vars}, {"terms", terms}};
}

template <class Coeff, class F>
BasisExpansion<Coeff> expansion_from_json(const Json& j, F&& coeff) {
  expect(j.is_object() && j.contains("basis") && j.contains("n") && j.contains("terms"), "basis expansion");
  BasisExpansion<Coeff> out;
  out.basis = parse_basis(j.at("basis").get<std::string>());
  out.num_vars = j.at("n").get<int>();
  for (const auto& t : j.at("terms")) {
    expect(t.is_array() && t.size() == 2, "basis expansion term");
    const Partition index = partition_from_json(t[0]);
    check_basis_index(out.basis, index, out.num_vars);
    out.add(index, coeff(t[1]));
  }
  return out;
}

}  // namespace

Json to_json(const BasisExpansion<Rational>& e) {
  return expansion_to_json(e, [](const Rational& c) { return to_json(c); });
}

Json to_json(const BasisExpansion<UniPoly>& e) {
  return expansion_to_json(e, [](const UniPoly& c) { return to_json(c); });
}

BasisExpansion<Rational> rational_expansion_from_json(const Json& j) {
  return expansion_from_json<Rational>(j, rational_from_json);
}

BasisExpansion<UniPoly> poly_expansion_from_json(const Json& j) {
  return expansion_from_json<UniPoly>(j, unipoly_from_json);
}

Json to_json(const RisingProductSpec& spec) {
  const bool uni = spec.num_params() == 1;
  auto poly = [&](const MultiPoly& p) { return uni ? to_json(p.to_unipoly()) : to_json(p); };
  Json table = Json::array();
  for (const auto& [key, c] : spec.table) table.push_back(Json::array({Json(key.first), key.second, poly(c)}));
  return Json{{"params", spec.params}, {"num_x", spec.num_x}, {"K", poly(spec.bound)}, {"table", table}};
}

RisingProductSpec rising_spec_from_json(const Json& j) {
  expect(j.is_object() && j.contains("params") && j.contains("K") && j.contains("table"), "rising product spec");
  RisingProductSpec spec;
  spec.params = j.at("params").get<std::vector<std::string>>();
  expect(!spec.params.empty(), "params must be nonempty");
  const std::size_t np = spec.params.size();
  auto poly = [&](const Json& p) {
    return np == 1 ? MultiPoly::from_unipoly(unipoly_from_json(p), 1, 0) : multipoly_from_json(p, np);
  };
  spec.bound = poly(j.at("K"));
  spec.num_x = 0;
  if (j.contains("num_x")) spec.num_x = j.at("num_x").get<std::size_t>();
  for (const auto& row : j.at("table")) {
    expect(row.is_array() && row.size() == 3 && row[0].is_array() && row[1].is_number_integer(), "table row");
    const auto e = row[0].get<IntVector>();
    if (spec.num_x == 0) spec.num_x = e.size();
    spec.add(e, row[1].get<int>(), poly(row[2]));
  }
  spec.validate();
  return spec;
}

Json to_json(const ChernPolynomial& p) {
  return Json{{"n", p.query.n},
              {"k", p.query.k},
              {"basis", std::string(to_string(p.query.basis))},
              {"degree_bound", p.degree_bound_used},
              {"samples", p.samples_used},
              {"terms", to_json(p.terms)}};
}

ChernPolynomial chern_polynomial_from_json(const Json& j) {
  expect(j.is_object(), "chern polynomial");
  ChernPolynomial p;
  p.query.n = j.at("n").get<int>();
  p.query.k = j.at("k").get<int>();
  p.query.basis = parse_basis(j.at("basis").get<std::string>());
  p.degree_bound_used = j.at("degree_bound").get<int>();
  p.samples_used = j.at("samples").get<std::vector<long>>();
  p.terms = poly_expansion_from_json(j.at("terms"));
  return p;
}

}  // namespace cpold::json
