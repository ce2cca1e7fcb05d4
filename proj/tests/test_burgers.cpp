#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heatsym/burgers.hpp"
#include "heatsym/gensym.hpp"

using namespace heatsym;
using A = AlgElement;

namespace {
std::mt19937_64 rng(31415);
Rat rr() {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return Rat(num(rng), den(rng));
}
EssQ rnd_ess() {
  Rat q = Rat(std::uniform_int_distribution<int>(1, 5)(rng), 1);
  EssQ e = compose(ess_K(rr()), compose(ess_D_scale(q), ess_Pt(rr())));
  if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) e = compose(ess_Kprime(), e);
  e.lambda = {ScalarExt(rr()), ScalarExt(rr())};
  Rat r = rr();
  if (r == 0) r = 1;
  e.sigma = ScalarExt(r, BigInt(3), rr());
  return e;
}
const RatFunc T = RatFunc::t();
const RatFunc X = RatFunc::x();
}  // namespace

TEST_CASE("hopf_cole examples") {
  HeatExpr expxt(ScalarExt(Rat(1)), RatFunc(Rat(1)), {}, X + T);
  CHECK(hopf_cole(expxt) == RatFunc(Rat(-2)));
  CHECK(hopf_cole(HeatExpr::from_ratfunc(heat_polynomial(2))) ==
        RatFunc(Rat(-4)) * X / (X * X + RatFunc(Rat(2)) * T));
  CHECK(hopf_cole(HeatExpr::kernel()) == X / T);
  CHECK_THROWS_AS(hopf_cole(HeatExpr()), std::domain_error);
  CHECK_THROWS_AS(hopf_cole(HeatExpr::from_ratfunc(X * X)), std::domain_error);
}

TEST_CASE("rho projection") {
  BurgQ id = rho_project(ess_I_sigma(ScalarExt(Rat(7))));
  CHECK(id == burgers_identity());
  BurgQ kp = rho_project(ess_Kprime());
  CHECK(kp.A.b == ScalarExt(Rat(-1)));
  CHECK(kp.A.c == ScalarExt(Rat(1)));
  for (int i = 0; i < 20; ++i) {
    EssQ a = rnd_ess(), b = rnd_ess();
    CHECK(rho_project(compose(a, b)) == compose_b(rho_project(a), rho_project(b)));
  }
}

TEST_CASE("burgers group operations and points") {
  BurgQ lam = burgers_identity();
  lam.lambda = {ScalarExt(Rat(3)), ScalarExt(Rat(-1))};
  BurgersPoint p = apply_point_b(lam, Rat(2), Rat(1), Rat(5));
  CHECK(p.v == ScalarExt(Rat(8)));  // v + lambda1

  BurgersPoint q = apply_point_b(burgers_identity(), Rat(1), Rat(2), Rat(3));
  CHECK(q.t == ScalarExt(Rat(1)));
  CHECK(q.x == ScalarExt(Rat(2)));
  CHECK(q.v == ScalarExt(Rat(3)));

  BurgQ kp = rho_project(ess_Kprime());
  BurgersPoint r = apply_point_b(kp, Rat(1), Rat(1), Rat(0));
  CHECK(r.t == ScalarExt(Rat(-1)));
  CHECK(r.x == ScalarExt(Rat(1)));
  CHECK(r.v == ScalarExt(Rat(-1)));

  for (int i = 0; i < 20; ++i) {
    BurgQ a = rho_project(rnd_ess()), b = rho_project(rnd_ess());
    CHECK(compose_b(a, inverse_b(a)) == burgers_identity());
    // pointwise composition agreement
    for (int tries = 0; tries < 10; ++tries) {
      Rat t = rr(), x = rr(), v = rr();
      try {
        BurgersPoint inner = apply_point_b(b, t, x, v);
        if (!inner.t.is_rational() || !inner.x.is_rational() || !inner.v.is_rational()) continue;
        BurgersPoint outer = apply_point_b(a, inner.t.rational_value(), inner.x.rational_value(),
                                           inner.v.rational_value());
        BurgersPoint direct = apply_point_b(compose_b(a, b), t, x, v);
        CHECK(outer.t == direct.t);
        CHECK(outer.x == direct.x);
        CHECK(outer.v == direct.v);
        break;
      } catch (const std::domain_error&) {
        continue;
      }
    }
  }
}

TEST_CASE("burgers solutions transform exactly") {
  BurgQ id = burgers_identity();
  RatFunc v = X / T;
  CHECK(apply_solution_b(id, v) == v);

  BurgQ kp = rho_project(ess_Kprime());
  CHECK(apply_solution_b(kp, RatFunc(Rat(0))) == X / T);

  BurgQ gal = burgers_identity();
  gal.lambda = {ScalarExt(Rat(5, 2)), ScalarExt(Rat(0))};
  CHECK(apply_solution_b(gal, RatFunc(Rat(-2))) == RatFunc(Rat(-2)) + RatFunc(Rat(5, 2)));

  CHECK_THROWS_AS(apply_solution_b(id, X), std::domain_error);
}

TEST_CASE("exp membership for burgers elements") {
  BurgQ lam = burgers_identity();
  lam.lambda = {ScalarExt(Rat(9)), ScalarExt(Rat(-4))};
  CHECK(is_in_exp_b(lam));
  BurgQ mE = burgers_identity();
  mE.A = {ScalarExt(Rat(-1)), ScalarExt(Rat(0)), ScalarExt(Rat(0)), ScalarExt(Rat(-1))};
  CHECK(is_in_exp_b(mE));
  BurgQ hyp = burgers_identity();
  hyp.A = {ScalarExt(Rat(-2)), ScalarExt(Rat(0)), ScalarExt(Rat(0)), ScalarExt(Rat(-1, 2))};
  CHECK(!is_in_exp_b(hyp));
}

TEST_CASE("hopf-cole intertwines the actions") {
  std::vector<HeatExpr> sols;
  for (int n = 0; n <= 3; ++n) sols.push_back(HeatExpr::from_ratfunc(heat_polynomial(n)));
  sols.push_back(HeatExpr::kernel());
  sols.push_back(HeatExpr(ScalarExt(Rat(1)), RatFunc(Rat(1)), {}, X + T));
  for (int i = 0; i < 12; ++i) {
    EssQ phi = rnd_ess();
    for (const auto& u : sols) {
      SolutionSum img = apply_solution(phi, SolutionSum(u));
      REQUIRE(img.terms().size() == 1);
      RatFunc lhs = hopf_cole(img.terms()[0]);
      RatFunc rhs = apply_solution_b(rho_project(phi), hopf_cole(u));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("burgers bracket table is the rho-image of the heat table") {
  // [D, Pt] = -2 Pt survives; anything producing I dies
  BAlg D = rho_lie(A::D()), Pt = rho_lie(A::Pt()), K = rho_lie(A::K());
  BAlg Gx = rho_lie(A::Gx()), Px = rho_lie(A::Px());
  CHECK(bracket_b(D, Pt) == rho_lie(A::Pt().scaled(Rat(-2))));
  CHECK(bracket_b(D, K) == rho_lie(A::K().scaled(Rat(2))));
  CHECK(bracket_b(Pt, K) == rho_lie(A::D()));
  CHECK(bracket_b(Pt, Gx) == rho_lie(A::Px()));
  CHECK(bracket_b(D, Gx) == rho_lie(A::Gx()));
  CHECK(bracket_b(D, Px) == rho_lie(A::Px().scaled(Rat(-1))));
  CHECK(bracket_b(K, Px) == rho_lie(A::Gx().scaled(Rat(-1))));
  // the Heisenberg relation collapses: [Gx, Px] = I/2 -> 0
  CHECK(bracket_b(Gx, Px) == BAlg{});
  // rho' is a homomorphism because I is central: check on the full table
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      A x = A::basis(i), y = A::basis(j);
      CHECK(bracket_b(rho_lie(x), rho_lie(y)) == rho_lie(bracket(x, y)));
    }
}

TEST_CASE("connectedness report") {
  ConnectednessReport rep = connectedness_report(25, 777);
  for (const auto& [name, ok] : rep.checks) {
    CAPTURE(name);
    CHECK(ok);
  }
  CHECK(rep.all_ok);
}
