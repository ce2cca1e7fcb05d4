#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heatsym/json_io.hpp"

using namespace heatsym;
using A = AlgElement;

namespace {
std::mt19937_64 rng(60601);
Rat rr() {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return Rat(num(rng), den(rng));
}
EssQ rnd_ess() {
  Rat q = Rat(std::uniform_int_distribution<int>(1, 4)(rng), 1);
  EssQ e = compose(ess_K(rr()), compose(ess_D_scale(q), ess_Pt(rr())));
  e.lambda = {ScalarExt(rr()), ScalarExt(rr())};
  e.sigma = ScalarExt(Rat(3, 2), BigInt(5), rr());
  return e;
}
}  // namespace

TEST_CASE("element json round trip") {
  for (int i = 0; i < 20; ++i) {
    EssQ e = rnd_ess();
    Json j = ess_to_json(e);
    CHECK(ess_from_json(j) == e);
  }
  // deterministic output: byte-identical dumps
  EssQ e = rnd_ess();
  CHECK(ess_to_json(e).dump() == ess_to_json(e).dump());
  // shifts
  FullElement f{e, SolutionSum(HeatExpr::kernel())};
  Json j = full_to_json(f);
  FullElement back = full_from_json(j);
  CHECK(back.ess == f.ess);
  REQUIRE(back.shift.terms().size() == 1);
  CHECK(back.shift.terms()[0] == HeatExpr::kernel());
}

TEST_CASE("element json validation") {
  Json j = ess_to_json(rnd_ess());
  j["A"][0][0] = "2";  // breaks det = 1
  CHECK_THROWS_AS(ess_from_json(j), std::domain_error);
  Json bad = Json::object();
  CHECK_THROWS_AS(ess_from_json(bad), std::exception);
}

TEST_CASE("alg element json") {
  A x;
  x[iPt] = Rat(1, 2);
  x[iI] = Rat(-3);
  Json j = alg_to_json(x);
  CHECK(j.at("Pt") == "1/2");
  CHECK(j.at("I") == "-3");
  CHECK(alg_from_json(j) == x);
  // partial objects default to zero
  CHECK(alg_from_json(Json::parse(R"({"D":"2"})")) == A::D().scaled(Rat(2)));
}

TEST_CASE("gensym json") {
  GenSymOp p = GenSymOp::term(1, 0, Rat(1, 2)) + GenSymOp::term(0, 2, Rat(-3));
  Json j = gensym_to_json(p);
  CHECK(gensym_from_json(j) == p);
  CHECK(j.at("terms").size() == 2);
}

TEST_CASE("burgers json") {
  BurgQ b = rho_project(rnd_ess());
  CHECK(burgers_from_json(burgers_to_json(b)) == b);
}

TEST_CASE("scalar json forms") {
  CHECK(scalar_to_json(ScalarExt(Rat(3, 4))) == Json("3/4"));
  ScalarExt s(Rat(-1, 2), BigInt(6), Rat(5));
  Json j = scalar_to_json(s);
  CHECK(scalar_from_json(j) == s);
  CHECK(scalar_from_json(Json("7")) == ScalarExt(Rat(7)));
}

TEST_CASE("canonical form json shape") {
  CanonicalForm c = canonicalize(Subalgebra{{A::D() + A::I().scaled(Rat(2))}});
  Json j = canonical_to_json(c);
  CHECK(j.at("label") == "s1.3");
  CHECK(j.at("params").at("mu") == "2");
  CHECK(j.contains("witness"));
  CHECK(j.contains("steps"));
}

TEST_CASE("solution sums as expression arrays") {
  SolutionSum s(HeatExpr::kernel());
  s.add(HeatExpr::from_ratfunc(RatFunc::x()));
  Json j = solution_to_json(s);
  CHECK(j.is_array());
  SolutionSum back = solution_from_json(j);
  CHECK(back.terms().size() == s.terms().size());
  CHECK(back.terms()[0] == s.terms()[0]);
  CHECK(back.terms()[1] == s.terms()[1]);
}
