#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heatsym/gensym.hpp"

using namespace heatsym;
using A = AlgElement;

namespace {
std::mt19937_64 rng(5150);
GenSymOp rnd_op(int maxdeg = 3, int terms = 3) {
  std::uniform_int_distribution<int> deg(0, maxdeg), num(-3, 3), den(1, 2);
  GenSymOp p;
  for (int i = 0; i < terms; ++i)
    p = p + GenSymOp::term(deg(rng), deg(rng), Rat(num(rng), den(rng)));
  return p;
}
GenSymOp Q(int k, int l) { return GenSymOp::term(k, l, Rat(1)); }
}  // namespace

TEST_CASE("normal ordering relation") {
  // Q^{01} Q^{10} = Q^{11} + 1/2 Q^{00}
  CHECK(product(Q(0, 1), Q(1, 0)) == Q(1, 1) + GenSymOp::term(0, 0, Rat(1, 2)));
  CHECK(product(Q(1, 0), Q(1, 0)) == Q(2, 0));
  GenSymOp p = rnd_op();
  CHECK(product(GenSymOp::unit(), p) == p);
  CHECK(product(p, GenSymOp::unit()) == p);
}

TEST_CASE("product is associative") {
  for (int i = 0; i < 20; ++i) {
    GenSymOp a = rnd_op(), b = rnd_op(), c = rnd_op();
    CHECK(product(product(a, b), c) == product(a, product(b, c)));
  }
}

TEST_CASE("brackets and signs") {
  CHECK(vf_bracket(Q(1, 0), Q(0, 1)) == GenSymOp::term(0, 0, Rat(1, 2)));
  CHECK(op_commutator(Q(1, 0), Q(0, 1)) == GenSymOp::term(0, 0, Rat(-1, 2)));
  GenSymOp p = rnd_op();
  CHECK(vf_bracket(p, p).is_zero());
}

TEST_CASE("closed formula examples") {
  CHECK(commutator_closed(1, 0, 0, 1) == GenSymOp::term(0, 0, Rat(1, 2)));
  CHECK(commutator_closed(2, 0, 0, 2) ==
        GenSymOp::term(1, 1, Rat(2)) + GenSymOp::term(0, 0, Rat(1, 2)));
  for (int kp = 0; kp <= 3; ++kp)
    for (int lp = 0; lp <= 3; ++lp) CHECK(commutator_closed(0, 0, kp, lp).is_zero());
}

TEST_CASE("jacobi identity for the bracket") {
  for (int i = 0; i < 12; ++i) {
    GenSymOp a = rnd_op(2, 2), b = rnd_op(2, 2), c = rnd_op(2, 2);
    GenSymOp s = vf_bracket(a, vf_bracket(b, c)) + vf_bracket(b, vf_bracket(c, a)) +
                 vf_bracket(c, vf_bracket(a, b));
    CHECK(s.is_zero());
  }
}

TEST_CASE("action on solutions") {
  // Q^{20} on 1 -> t/2 + x^2/4
  SolutionSum r = gensym_apply(Q(2, 0), HeatExpr::constant(Rat(1)));
  REQUIRE(r.terms().size() == 1);
  RatFunc T = RatFunc::t(), X = RatFunc::x();
  CHECK(r.terms()[0] ==
        HeatExpr::from_ratfunc(T * RatFunc(Rat(1, 2)) + X * X * RatFunc(Rat(1, 4))));

  // Q^{01} on x^2 + 2t -> 2x
  r = gensym_apply(Q(0, 1), HeatExpr::from_ratfunc(heat_polynomial(2)));
  CHECK(r.terms()[0] == HeatExpr::from_ratfunc(RatFunc(Rat(2)) * X));

  // Q^{02} on exp(x+t) -> exp(x+t)
  HeatExpr e(ScalarExt(Rat(1)), RatFunc(Rat(1)), {}, X + T);
  r = gensym_apply(Q(0, 2), e);
  CHECK(r.terms()[0] == e);

  CHECK_THROWS_AS(gensym_apply(Q(0, 1), HeatExpr::from_ratfunc(X * X)), std::domain_error);
}

TEST_CASE("operator action is a representation") {
  for (int i = 0; i < 8; ++i) {
    GenSymOp p = rnd_op(2, 2), q = rnd_op(2, 2);
    for (int n = 0; n <= 3; ++n) {
      HeatExpr h = HeatExpr::from_ratfunc(heat_polynomial(n));
      SolutionSum lhs = gensym_apply(product(p, q), h);
      SolutionSum rhs = gensym_apply(p, gensym_apply(q, h));
      SolutionSum diff = lhs + (-rhs);
      CHECK(diff.is_zero());
    }
  }
}

TEST_CASE("G halves the next heat polynomial") {
  for (int n = 0; n <= 6; ++n) {
    SolutionSum g = gensym_apply(Q(1, 0), HeatExpr::from_ratfunc(heat_polynomial(n)));
    REQUIRE(g.terms().size() == 1);
    CHECK(g.terms()[0] ==
          HeatExpr::from_ratfunc(heat_polynomial(n + 1)).scaled(ScalarExt(Rat(1, 2))));
  }
}

TEST_CASE("from_lie table and the characteristic oracle") {
  CHECK(from_lie(A::I()) == Q(0, 0));
  CHECK(from_lie(A::Px()) == -Q(0, 1));
  CHECK(from_lie(A::Gx()) == -Q(1, 0));
  CHECK(from_lie(A::Pt()) == -Q(0, 2));
  CHECK(from_lie(A::K()) == -Q(2, 0));
  CHECK(from_lie(A::D()) == -(GenSymOp::term(1, 1, Rat(2)) + GenSymOp::term(0, 0, Rat(1, 2))));

  // characteristic oracle: for X = tau dt + xi dx + phi u du the evolutionary
  // characteristic on solutions is phi u - tau u_xx - xi u_x; evaluate both
  // sides on generic solutions and compare
  struct VF {
    RatFunc tau, xi, phi;
  };
  auto vf_of = [](int i) -> VF {
    RatFunc T = RatFunc::t(), X = RatFunc::x();
    switch (i) {
      case iPt: return {RatFunc(Rat(1)), RatFunc(Rat(0)), RatFunc(Rat(0))};
      case iD: return {RatFunc(Rat(2)) * T, X, RatFunc(Rat(-1, 2))};
      case iK:
        return {T * T, T * X, -(X * X + RatFunc(Rat(2)) * T) * RatFunc(Rat(1, 4))};
      case iGx: return {RatFunc(Rat(0)), T, -X * RatFunc(Rat(1, 2))};
      case iPx: return {RatFunc(Rat(0)), RatFunc(Rat(1)), RatFunc(Rat(0))};
      default: return {RatFunc(Rat(0)), RatFunc(Rat(0)), RatFunc(Rat(1))};
    }
  };
  for (int i = 0; i < 6; ++i) {
    VF v = vf_of(i);
    for (int n = 0; n <= 4; ++n) {
      HeatExpr u = HeatExpr::from_ratfunc(heat_polynomial(n));
      RatFunc ux = u.A().diff_x(), uxx = ux.diff_x();
      RatFunc characteristic = v.phi * u.A() - v.tau * uxx - v.xi * ux;
      SolutionSum img = gensym_apply(from_lie(A::basis(i)), u);
      RatFunc got(Rat(0));
      for (const auto& term : img.terms()) {
        REQUIRE(term.factors().empty());
        REQUIRE(term.g().is_zero());
        REQUIRE(term.c().is_rational());
        got += term.A() * RatFunc(term.c().rational_value());
      }
      CHECK(got == characteristic);
    }
  }
}

TEST_CASE("from_lie respects brackets") {
  std::mt19937_64 r2(999);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  for (int i = 0; i < 15; ++i) {
    A x, y;
    for (size_t j = 0; j < 6; ++j) {
      x[j] = Rat(num(r2), den(r2));
      y[j] = Rat(num(r2), den(r2));
    }
    CHECK(from_lie(bracket(x, y)) == vf_bracket(from_lie(x), from_lie(y)));
  }
  // the named instance [D, Px] = -Px
  CHECK(vf_bracket(from_lie(A::D()), from_lie(A::Px())) == from_lie(-A::Px()));
}

TEST_CASE("dim lambda") {
  CHECK(dim_lambda(0).dim == 1);
  CHECK(dim_lambda(0).basis[0] == Q(0, 0));
  CHECK(dim_lambda(3).dim == 4);
  auto d1 = dim_lambda(1);
  CHECK(d1.dim == 2);
  CHECK(d1.basis[0] == -from_lie(A::Px()));
  CHECK(d1.basis[1] == -from_lie(A::Gx()));
}

TEST_CASE("mixed bracket with shifts acts through apply") {
  // [Z(h), Q^{kl}] = Z(G^k Dx^l h): realized by gensym_apply on the shift
  HeatExpr h = HeatExpr::from_ratfunc(heat_polynomial(3));
  SolutionSum img = gensym_apply(Q(1, 1), h);
  // G Dx h3 = G (3 h2) = 3/2 h3... verify against the recursions
  REQUIRE(img.terms().size() == 1);
  CHECK(img.terms()[0] ==
        HeatExpr::from_ratfunc(heat_polynomial(3)).scaled(ScalarExt(Rat(3, 2))));
}
