#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heatsym/ratfunc.hpp"
#include "heatsym/scalar_ext.hpp"

using namespace heatsym;

namespace {

std::mt19937_64 rng(20240811);

Rat rnd_rat(int lo = -6, int hi = 6, int maxden = 4) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, maxden);
  return Rat(num(rng), den(rng));
}

Poly2 rnd_poly(int maxdeg = 2) {
  std::uniform_int_distribution<int> deg(0, maxdeg);
  Poly2 p;
  int n = deg(rng) + 1;
  for (int i = 0; i < n; ++i) p += Poly2::monomial(deg(rng), deg(rng), rnd_rat());
  return p;
}

RatFunc rnd_ratfunc() {
  Poly2 d;
  while (d.is_zero()) d = rnd_poly();
  return RatFunc(rnd_poly(), d);
}

const RatFunc T = RatFunc::t();
const RatFunc X = RatFunc::x();

}  // namespace

TEST_CASE("ratfunc arithmetic examples") {
  CHECK((T / X) * (X / T) == RatFunc(Rat(1)));
  CHECK(RatFunc(Rat(1)) / T + RatFunc(Rat(1)) / X == (X + T) / (T * X));
  CHECK(T * T / X - (T * T) / X == RatFunc(Rat(0)));
  CHECK_THROWS_AS(T / RatFunc(Rat(0)), std::domain_error);
}

TEST_CASE("ratfunc differentiation examples") {
  CHECK(ratfunc_diff(X * X / T, Var::x) == RatFunc(Rat(2)) * X / T);
  RatFunc f = RatFunc(Rat(1)) / (T + RatFunc(Rat(1)));
  CHECK(ratfunc_diff(f, Var::t) == -(f * f));
  CHECK(ratfunc_diff(T.pow(3), Var::x) == RatFunc(Rat(0)));
}

TEST_CASE("ratfunc substitution examples") {
  RatFunc ts = (T + RatFunc(Rat(1))) / (T - RatFunc(Rat(1)));
  CHECK(T.subst(ts, X) == ts);
  CHECK((X * X).subst(T, X / T) == X * X / (T * T));
  // f = t + x at (t,x) -> (-1/t, x/t) gives (x-1)/t
  RatFunc composed = (T + X).subst(-(RatFunc(Rat(1)) / T), X / T);
  CHECK(composed == (X - RatFunc(Rat(1))) / T);
  // independent check by evaluation at rational points
  for (auto [tv, xv] : {std::pair{Rat(2), Rat(3)}, {Rat(-3), Rat(1, 2)}, {Rat(1, 3), Rat(5)}}) {
    Rat lhs = composed.eval(tv, xv);
    Rat rhs = -(Rat(1) / tv) + xv / tv;
    CHECK(lhs == rhs);
  }
  CHECK_THROWS_AS((RatFunc(Rat(1)) / (T - X)).subst(X, X), std::domain_error);
}

TEST_CASE("field axioms on random rational functions") {
  for (int i = 0; i < 40; ++i) {
    RatFunc a = rnd_ratfunc(), b = rnd_ratfunc(), c = rnd_ratfunc();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == RatFunc(Rat(0)));
    if (!a.is_zero()) CHECK(a / a == RatFunc(Rat(1)));
  }
}

TEST_CASE("product and chain rule hold exactly") {
  for (int i = 0; i < 25; ++i) {
    RatFunc a(rnd_poly()), b(rnd_poly());
    for (Var v : {Var::t, Var::x}) {
      CHECK(ratfunc_diff(a * b, v) == ratfunc_diff(a, v) * b + a * ratfunc_diff(b, v));
    }
    // chain rule through substitution: d/dt f(p(t,x), x) = f_t(p)·p_t
    RatFunc p(rnd_poly());
    RatFunc f = a;
    RatFunc lhs = ratfunc_diff(f.subst(p, X), Var::t);
    RatFunc rhs = ratfunc_diff(f, Var::t).subst(p, X) * ratfunc_diff(p, Var::t);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("scalar_ext multiplication and normalization") {
  ScalarExt a(Rat(2), BigInt(2), Rat(1)), b(Rat(3), BigInt(2), Rat(-1));
  CHECK(a * b == ScalarExt(Rat(12)));
  CHECK(ScalarExt(Rat(1), BigInt(2), Rat(0)) * ScalarExt(Rat(1), BigInt(3), Rat(0)) ==
        ScalarExt(Rat(1), BigInt(6), Rat(0)));
  CHECK(ScalarExt(Rat(1), BigInt(8), Rat(0)) == ScalarExt(Rat(2), BigInt(2), Rat(0)));
  CHECK(ScalarExt(Rat(1), BigInt(12), Rat(0)) == ScalarExt(Rat(2), BigInt(3), Rat(0)));
}

TEST_CASE("scalar_ext group structure") {
  std::uniform_int_distribution<int> sdist(1, 30);
  auto rnd_scalar = [&] {
    Rat r = rnd_rat();
    while (r == 0) r = rnd_rat();
    return ScalarExt(r, BigInt(sdist(rng)), rnd_rat());
  };
  ScalarExt one(Rat(1));
  for (int i = 0; i < 40; ++i) {
    ScalarExt a = rnd_scalar(), b = rnd_scalar(), c = rnd_scalar();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * one == a);
    CHECK(a * a.inverse() == one);
    // normalization idempotence
    CHECK(ScalarExt(a.r(), a.s(), a.q()) == a);
  }
}

TEST_CASE("scalar_ext comparisons") {
  ScalarExt s2 = ScalarExt::sqrt_of(Rat(2));
  CHECK(s2.cmp_rat(Rat(1)) == 1);
  CHECK(s2.cmp_rat(Rat(2)) == -1);
  CHECK((-s2).cmp_rat(Rat(-2)) == 1);
  CHECK(ScalarExt::exp_of(Rat(1)).cmp_rat(Rat(3)) == -1);
  CHECK(ScalarExt::exp_of(Rat(1)).cmp_rat(Rat(2)) == 1);
  CHECK(ScalarExt(Rat(5)).cmp_rat(Rat(5)) == 0);
  CHECK(rat_pow_half(Rat(8), 1) == ScalarExt(Rat(2), BigInt(2), Rat(0)));
  CHECK(rat_pow_half(Rat(4), -1) == ScalarExt(Rat(1, 2)));
  CHECK(rat_pow_half(Rat(2, 3), 3) == ScalarExt(Rat(2, 9), BigInt(6), Rat(0)));
}

TEST_CASE("scalar_ext partial addition") {
  ScalarExt a(Rat(2), BigInt(3), Rat(1, 2)), b(Rat(-5), BigInt(3), Rat(1, 2));
  CHECK(a + b == ScalarExt(Rat(-3), BigInt(3), Rat(1, 2)));
  CHECK(a + ScalarExt(Rat(0)) == a);
  CHECK_THROWS_AS(a + ScalarExt(Rat(1), BigInt(2), Rat(1, 2)), std::domain_error);
}

TEST_CASE("poly gcd reduces quotients") {
  Poly2 t = Poly2::t(), x = Poly2::x();
  Poly2 common = t * x + Poly2(Rat(1));
  RatFunc f((t + x) * common, (t * t + Poly2(Rat(1))) * common);
  CHECK(f == RatFunc(t + x, t * t + Poly2(Rat(1))));
  CHECK(f.num() == t + x);  // reduced representation, not only equal value
}
