#include "heatsym/json_io.hpp"

#include "heatsym/expr_io.hpp"

namespace heatsym {

Json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw std::domain_error("expected a rational as \"p/q\" string");
}

Json scalar_to_json(const ScalarExt& s) {
  if (s.is_rational()) return rat_to_json(s.rational_value());
  Json j;
  j["r"] = rat_to_json(s.r());
  j["s"] = s.s().str();
  j["q"] = rat_to_json(s.q());
  return j;
}

ScalarExt scalar_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return ScalarExt(rat_from_json(j));
  if (!j.is_object()) throw std::domain_error("expected a scalar object {r,s,q}");
  Rat r = rat_from_json(j.at("r"));
  BigInt s = j.contains("s") ? BigInt(j.at("s").is_string() ? j.at("s").get<std::string>()
                                                            : std::to_string(j.at("s").get<long long>()))
                             : BigInt(1);
  Rat q = j.contains("q") ? rat_from_json(j.at("q")) : Rat(0);
  return ScalarExt(r, s, q);
}

Json ess_to_json(const EssQ& e) {
  Json j;
  j["A"] = Json::array({Json::array({scalar_to_json(e.A.a), scalar_to_json(e.A.b)}),
                        Json::array({scalar_to_json(e.A.c), scalar_to_json(e.A.d)})});
  j["lambda"] = Json::array({scalar_to_json(e.lambda.l1), scalar_to_json(e.lambda.l0)});
  Json sig;
  sig["r"] = rat_to_json(e.sigma.r());
  sig["s"] = e.sigma.s().str();
  sig["q"] = rat_to_json(e.sigma.q());
  j["sigma"] = sig;
  return j;
}

EssQ ess_from_json(const Json& j) {
  EssQ e;
  const Json& A = j.at("A");
  e.A = {scalar_from_json(A.at(0).at(0)), scalar_from_json(A.at(0).at(1)),
         scalar_from_json(A.at(1).at(0)), scalar_from_json(A.at(1).at(1))};
  const Json& lam = j.at("lambda");
  e.lambda = {scalar_from_json(lam.at(0)), scalar_from_json(lam.at(1))};
  e.sigma = j.contains("sigma") ? scalar_from_json(j.at("sigma")) : ScalarExt(Rat(1));
  if (!ess_valid(e)) throw std::domain_error("element violates det A = 1 or sigma != 0");
  return e;
}

Json full_to_json(const FullElement& f) {
  Json j = ess_to_json(f.ess);
  Json shift = Json::array();
  for (const auto& term : f.shift.terms()) shift.push_back(print_expr(term));
  j["shift"] = shift;
  return j;
}

FullElement full_from_json(const Json& j) {
  FullElement f;
  f.ess = ess_from_json(j);
  if (j.contains("shift")) {
    for (const auto& s : j.at("shift")) f.shift.add(parse_expr(s.get<std::string>()));
    for (const auto& term : f.shift.terms())
      if (!term.heat_residual().is_zero())
        throw std::domain_error("shift term is not a heat solution");
  }
  return f;
}

Json alg_to_json(const AlgElement& x) {
  Json j;
  for (int i = 0; i < 6; ++i) j[basis_name(i)] = rat_to_json(x[static_cast<size_t>(i)]);
  return j;
}

AlgElement alg_from_json(const Json& j) {
  AlgElement x;
  for (int i = 0; i < 6; ++i)
    if (j.contains(basis_name(i))) x[static_cast<size_t>(i)] = rat_from_json(j.at(basis_name(i)));
  return x;
}

Json gensym_to_json(const GenSymOp& p) {
  Json terms = Json::array();
  for (const auto& [kl, c] : p.coeffs()) {
    Json t;
    t["k"] = kl.first;
    t["l"] = kl.second;
    t["c"] = rat_to_json(c);
    terms.push_back(t);
  }
  Json j;
  j["terms"] = terms;
  return j;
}

GenSymOp gensym_from_json(const Json& j) {
  GenSymOp p;
  for (const auto& t : j.at("terms"))
    p = p + GenSymOp::term(t.at("k").get<int>(), t.at("l").get<int>(), rat_from_json(t.at("c")));
  return p;
}

Json burgers_to_json(const BurgQ& b) {
  Json j;
  j["A"] = Json::array({Json::array({scalar_to_json(b.A.a), scalar_to_json(b.A.b)}),
                        Json::array({scalar_to_json(b.A.c), scalar_to_json(b.A.d)})});
  j["lambda"] = Json::array({scalar_to_json(b.lambda.l1), scalar_to_json(b.lambda.l0)});
  return j;
}

BurgQ burgers_from_json(const Json& j) {
  BurgQ b;
  const Json& A = j.at("A");
  b.A = {scalar_from_json(A.at(0).at(0)), scalar_from_json(A.at(0).at(1)),
         scalar_from_json(A.at(1).at(0)), scalar_from_json(A.at(1).at(1))};
  const Json& lam = j.at("lambda");
  b.lambda = {scalar_from_json(lam.at(0)), scalar_from_json(lam.at(1))};
  ScalarExt det = b.A.a * b.A.d - b.A.b * b.A.c;
  if (!(det == ScalarExt(Rat(1)))) throw std::domain_error("element violates det A = 1");
  return b;
}

Json canonical_to_json(const CanonicalForm& c) {
  Json j;
  j["label"] = c.label;
  Json params;
  for (const auto& [k, v] : c.params) params[k] = rat_to_json(v);
  j["params"] = params;
  j["witness"] = ess_to_json(c.witness);
  j["steps"] = c.steps;
  return j;
}

Json solution_to_json(const SolutionSum& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) terms.push_back(print_expr(t));
  return terms;
}

SolutionSum solution_from_json(const Json& j) {
  SolutionSum s;
  if (j.is_string()) {
    s.add(parse_expr(j.get<std::string>()));
    return s;
  }
  for (const auto& t : j) s.add(parse_expr(t.get<std::string>()));
  return s;
}

}  // namespace heatsym
