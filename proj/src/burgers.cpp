#include "heatsym/burgers.hpp"

#include <random>

namespace heatsym {

namespace {
Rat rat_of(const ScalarExt& s, const char* what) {
  if (!s.is_rational())
    throw std::domain_error(std::string("burgers: ") + what + " must be rational here");
  return s.rational_value();
}
}  // namespace

BurgQ burgers_identity() {
  EssQ e = ess_identity<ScalarExt>();
  return {e.A, e.lambda};
}

BurgQ compose_b(const BurgQ& a, const BurgQ& b) {
  EssQ ea{a.A, a.lambda, ScalarExt(Rat(1))};
  EssQ eb{b.A, b.lambda, ScalarExt(Rat(1))};
  EssQ r = compose(ea, eb);
  return {r.A, r.lambda};
}

BurgQ inverse_b(const BurgQ& a) {
  EssQ ea{a.A, a.lambda, ScalarExt(Rat(1))};
  EssQ r = inverse(ea);
  return {r.A, r.lambda};
}

BurgQ rho_project(const EssQ& phi) { return {phi.A, phi.lambda}; }

BurgersPoint apply_point_b(const BurgQ& phi, const Rat& t, const Rat& x, const Rat& v) {
  ScalarExt den = phi.A.c * ScalarExt(t) + phi.A.d;
  if (den.is_zero()) throw std::domain_error("apply_point_b: point lies on the excluded locus");
  ScalarExt ts = (phi.A.a * ScalarExt(t) + phi.A.b) / den;
  ScalarExt xs = (ScalarExt(x) + phi.lambda.l1 * ScalarExt(t) + phi.lambda.l0) / den;
  ScalarExt vs = den * ScalarExt(v) - phi.A.c * ScalarExt(x) + phi.lambda.l1 * phi.A.d -
                 phi.lambda.l0 * phi.A.c;
  return {ts, xs, vs};
}

RatFunc hopf_cole(const HeatExpr& u) {
  if (u.is_zero()) throw std::domain_error("hopf_cole: zero solution");
  if (!u.heat_residual().is_zero())
    throw std::domain_error("hopf_cole: input is not a heat solution");
  // v = -2 u_x/u = -2 (A_x/A + g_x); the t-only factors drop out
  RatFunc v = RatFunc(Rat(-2)) * (u.A().diff_x() / u.A() + u.g().diff_x());
  if (!burgers_residual(v).is_zero())
    throw std::logic_error("hopf_cole: image residual is not zero");
  return v;
}

RatFunc apply_solution_b(const BurgQ& phi, const RatFunc& v) {
  if (!burgers_residual(v).is_zero())
    throw std::domain_error("apply_solution_b: input is not a Burgers solution");
  Rat al = rat_of(phi.A.a, "alpha"), be = rat_of(phi.A.b, "beta");
  Rat ga = rat_of(phi.A.c, "gamma"), de = rat_of(phi.A.d, "delta");
  Rat l1 = rat_of(phi.lambda.l1, "lambda1"), l0 = rat_of(phi.lambda.l0, "lambda0");
  Poly2 t = Poly2::t(), x = Poly2::x();
  RatFunc D(Poly2(al) - t.scaled(ga));
  if (D.is_zero()) throw std::domain_error("apply_solution_b: degenerate element");
  RatFunc Tst = RatFunc(t.scaled(de) - Poly2(be)) / D;
  RatFunc Xst = RatFunc(x) / D - RatFunc(l1) * Tst - RatFunc(l0);
  RatFunc out = v.subst(Tst, Xst) / D - RatFunc(x.scaled(ga)) / D + RatFunc(l1) / D;
  if (!burgers_residual(out).is_zero())
    throw std::logic_error("apply_solution_b: output residual is not zero");
  return out;
}

bool is_in_exp_b(const BurgQ& phi) {
  Mat2<ScalarExt> mE{ScalarExt(Rat(-1)), ScalarExt(Rat(0)), ScalarExt(Rat(0)), ScalarExt(Rat(-1))};
  if (phi.A == mE) return true;
  return scalar_sum_cmp(phi.A.a, phi.A.d, Rat(-2)) > 0;
}

namespace {

// triangular word of an SL2 matrix through factors that all lie in exp:
// -E, lower/upper unitriangular, positive diagonal, and the K'-rotation
std::vector<BurgQ> exp_word(const BurgQ& phi) {
  std::vector<BurgQ> out;
  EssQ e{phi.A, {ScalarExt(Rat(0)), ScalarExt(Rat(0))}, ScalarExt(Rat(1))};
  for (const Move& m : decompose_word(e)) {
    if (m.kind == Move::Sig) continue;
    EssQ el = move_element(m);
    out.push_back(BurgQ{el.A, el.lambda});
  }
  // the lambda part is a single exp-member factor
  if (!(phi.lambda.l1.is_zero() && phi.lambda.l0.is_zero())) {
    BurgQ lam = burgers_identity();
    lam.lambda = phi.lambda;
    out.push_back(lam);
  }
  return out;
}

}  // namespace

ConnectednessReport connectedness_report(int samples, uint64_t seed) {
  ConnectednessReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  auto rnd = [&] { return Rat(num(rng), den(rng)); };
  auto rnd_burg = [&] {
    Rat a = rnd();
    while (a == 0) a = rnd();
    Rat b = rnd(), c = rnd();
    Rat d = (1 + b * c) / a;
    BurgQ e = burgers_identity();
    e.A = {ScalarExt(a), ScalarExt(b), ScalarExt(c), ScalarExt(d)};
    e.lambda = {ScalarExt(rnd()), ScalarExt(rnd())};
    return e;
  };

  // every random element factors through exp-members whose product is the element
  bool words_ok = true;
  for (int i = 0; i < samples && words_ok; ++i) {
    BurgQ phi = rnd_burg();
    std::vector<BurgQ> w = exp_word(phi);
    BurgQ acc = burgers_identity();
    for (const auto& f : w) {
      if (!is_in_exp_b(f)) words_ok = false;
      acc = compose_b(acc, f);
    }
    if (!(acc == phi)) words_ok = false;
  }
  rep.add("every element is a product of exp-members (triangular word)", words_ok);

  Mat2<ScalarExt> mE{ScalarExt(Rat(-1)), ScalarExt(Rat(0)), ScalarExt(Rat(0)), ScalarExt(Rat(-1))};
  BurgQ minusE = burgers_identity();
  minusE.A = mE;
  rep.add("(-E, 0) lies in exp", is_in_exp_b(minusE));

  // only (E, 0) acts as the identity: check the symbolic v-component
  bool identity_ok = true;
  for (int i = 0; i < samples && identity_ok; ++i) {
    BurgQ phi = rnd_burg();
    bool is_id_params = phi == burgers_identity();
    bool acts_trivially = true;
    // test action on sample points
    for (const Rat& tv : {Rat(0), Rat(1), Rat(-2)}) {
      for (const Rat& xv : {Rat(1), Rat(-1, 2)}) {
        try {
          BurgersPoint p = apply_point_b(phi, tv, xv, Rat(1, 3));
          if (!(p.t == ScalarExt(tv) && p.x == ScalarExt(xv) && p.v == ScalarExt(Rat(1, 3))))
            acts_trivially = false;
        } catch (const std::domain_error&) {
          acts_trivially = false;
        }
      }
    }
    if (acts_trivially != is_id_params) identity_ok = false;
  }
  // the kernel of rho: central elements project to the identity
  bool ker_ok = true;
  for (const Rat& s : {Rat(2), Rat(-1), Rat(1, 3)}) {
    EssQ c = ess_I_sigma(ScalarExt(s));
    BurgQ img = rho_project(c);
    if (!(img == burgers_identity())) ker_ok = false;
  }
  rep.add("only (E,0) acts as the identity", identity_ok);
  rep.add("Z(G^ess) projects to the identity", ker_ok);
  return rep;
}

BAlg rho_lie(const AlgElement& X) { return {X[iPt], X[iD], X[iK], X[iGx], X[iPx]}; }

AlgElement lift_lie(const BAlg& Y) {
  AlgElement X;
  for (size_t i = 0; i < 5; ++i) X[i] = Y[i];
  return X;
}

BAlg bracket_b(const BAlg& X, const BAlg& Y) {
  AlgElement b = bracket(lift_lie(X), lift_lie(Y));
  return rho_lie(b);  // the I component is killed by rho'
}

}  // namespace heatsym
