#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heatsym/expr_io.hpp"
#include "heatsym/gensym.hpp"

using namespace heatsym;

TEST_CASE("grammar examples") {
  HeatExpr p = parse_expr("x^2 + 2*t");
  CHECK(p == HeatExpr::from_ratfunc(RatFunc::x() * RatFunc::x() + RatFunc(Rat(2)) * RatFunc::t()));

  HeatExpr k = parse_expr("t^(-1/2) * exp(-x^2/(4*t)) {t>0}");
  CHECK(k == HeatExpr::kernel());
  CHECK(k.factors().size() == 1);
  CHECK(k.factors()[0].exponent == Rat(-1, 2));
  CHECK(k.factors()[0].sign == 1);

  CHECK_THROWS_AS(parse_expr("exp(exp(x))"), ParseError);
}

TEST_CASE("errors carry positions and reasons") {
  CHECK_THROWS_WITH_AS(parse_expr("x +"), doctest::Contains("expected a base"), ParseError);
  CHECK_THROWS_AS(parse_expr("x^(1/3)"), ParseError);     // not a half-integer
  CHECK_THROWS_AS(parse_expr("x^(1/2)"), ParseError);     // not affine in t
  CHECK_THROWS_AS(parse_expr("(x+t)^(1/2)"), ParseError); // not affine in t
  CHECK_THROWS_AS(parse_expr("t^(1/2) + x"), ParseError); // sum leaves the class
  CHECK_THROWS_AS(parse_expr("1/0"), ParseError);
  CHECK_THROWS_AS(parse_expr("t^(1/2) {t<0}"), ParseError);  // tag contradicts the factor
}

TEST_CASE("negative bases select the left component") {
  HeatExpr e = parse_expr("(-t)^(1/2)");
  CHECK(e.factors()[0].sign == -1);
  DomainComponent d = e.domain();
  REQUIRE(d.upper.has_value());
  CHECK(*d.upper == 0);
}

TEST_CASE("round trip is exact on representative expressions") {
  std::vector<std::string> samples = {
      "x^2 + 2*t",
      "t^(-1/2) * exp(-x^2/(4*t)) {t>0}",
      "(-3/2) * (x^3 + 6*t*x)",
      "2^(1/2) * (t - 1)^(-1/2) * exp((x^2 - x)/(4*t - 4)) {t>1}",
      "(-t)^(3/2) * exp(-1/2) {t<0}",
      "exp(x + t)",
      "(x)/(t)",
      "(2*t - 1)^(1/2) * (t + 2)^(-5/2) * exp((x + 1)/(t - 3))",
  };
  for (const auto& s : samples) {
    CAPTURE(s);
    HeatExpr e = parse_expr(s);
    HeatExpr back = parse_expr(print_expr(e));
    CHECK(back == e);
  }
}

TEST_CASE("round trip through generated solutions") {
  for (int n = 0; n <= 6; ++n) {
    HeatExpr e = HeatExpr::from_ratfunc(heat_polynomial(n));
    CHECK(parse_expr(print_expr(e)) == e);
  }
  HeatExpr k = HeatExpr::kernel();
  CHECK(parse_expr(print_expr(k)) == k);
}

TEST_CASE("scalar prefactors print inside the grammar") {
  HeatExpr e(ScalarExt(Rat(-3, 4), BigInt(6), Rat(2, 3)), RatFunc(Rat(1)), {},
             RatFunc::x() / RatFunc::t());
  HeatExpr back = parse_expr(print_expr(e));
  CHECK(back == e);
}

TEST_CASE("parse_ratfunc rejects structured expressions") {
  CHECK(parse_ratfunc("x/t + 1") == RatFunc::x() / RatFunc::t() + RatFunc(Rat(1)));
  CHECK_THROWS_AS(parse_ratfunc("t^(1/2)"), ParseError);
}
