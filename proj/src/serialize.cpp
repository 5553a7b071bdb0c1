#include "nval/serialize.hpp"

#include <string>
#include <vector>

namespace nval {

Json to_json(const Polynomial& p) {
  Json j;
  Json vars = Json::array();
  const std::size_t width = p.vars() ? p.vars()->size() : 0;
  for (std::size_t i = 0; i < width; ++i) vars.push_back(p.vars()->name(i));
  j["vars"] = std::move(vars);
  Json terms = Json::array();
  for (const auto& [mono, coeff] : p) {
    Json exp = Json::array();
    for (std::size_t i = 0; i < width; ++i) exp.push_back(mono.exponent(i));
    terms.push_back(Json{{"exp", std::move(exp)}, {"coeff", coeff.str()}});
  }
  j["terms"] = std::move(terms);
  return j;
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
  VarTablePtr table = names.empty() ? nullptr : VarTable::create(names);
  Polynomial p = names.empty() ? Polynomial(0) : Polynomial(Int(0), table);
  for (const Json& term : j.at("terms")) {
    std::vector<std::uint32_t> exp = term.at("exp").get<std::vector<std::uint32_t>>();
    if (exp.size() != names.size())
      throw std::invalid_argument("polynomial_from_json: exponent width mismatch");
    const Int coeff = parse_int(term.at("coeff").get<std::string>());
    if (names.empty())
      p += Polynomial(coeff);
    else
      p += Polynomial::monomial(table, Monomial(std::move(exp)), coeff);
  }
  return p;
}

Json to_json(const SymExpansion& e) {
  Json j;
  j["arity"] = e.arity();
  Json terms = Json::array();
  for (const auto& [exp, coeff] : e.coeffs()) {
    Json ev = Json::array();
    for (std::uint32_t v : exp) ev.push_back(v);
    terms.push_back(Json{{"exp", std::move(ev)}, {"coeff", coeff.str()}});
  }
  j["terms"] = std::move(terms);
  return j;
}

SymExpansion sym_expansion_from_json(const Json& j) {
  SymExpansion e(j.at("arity").get<std::size_t>());
  for (const Json& term : j.at("terms"))
    e.add(term.at("exp").get<std::vector<std::uint32_t>>(),
          parse_int(term.at("coeff").get<std::string>()));
  return e;
}

}  // namespace nval
