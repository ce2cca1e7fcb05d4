#include "heatsym/pointgroup.hpp"

#include <random>
#include <sstream>

namespace heatsym {

namespace {

ScalarExt S0() { return ScalarExt(Rat(0)); }
ScalarExt S1() { return ScalarExt(Rat(1)); }

EssQ make_ess(Rat a, Rat b, Rat c, Rat d, Rat l1, Rat l0, ScalarExt sigma) {
  return EssQ{{ScalarExt(a), ScalarExt(b), ScalarExt(c), ScalarExt(d)},
              {ScalarExt(l1), ScalarExt(l0)},
              std::move(sigma)};
}

Rat rat_of(const ScalarExt& s, const char* what) {
  if (!s.is_rational())
    throw std::domain_error(std::string("pointgroup: ") + what + " must be rational here");
  return s.rational_value();
}

}  // namespace

EssQ ess_J() { return make_ess(-1, 0, 0, -1, 0, 0, S1()); }
EssQ ess_Kprime() { return make_ess(0, -1, 1, 0, 0, 0, S1()); }
EssQ ess_Iprime() { return make_ess(1, 0, 0, 1, 0, 0, ScalarExt(Rat(-1))); }
EssQ ess_Pt(const Rat& eps) { return make_ess(1, eps, 0, 1, 0, 0, S1()); }
EssQ ess_K(const Rat& eps) { return make_ess(1, 0, -eps, 1, 0, 0, S1()); }
EssQ ess_D_scale(const Rat& q) {
  if (q <= 0) throw std::domain_error("ess_D_scale: q must be positive");
  return make_ess(q, 0, 0, Rat(1) / q, 0, 0, S1());
}
EssQ ess_Gx(const Rat& eps) { return make_ess(1, 0, 0, 1, eps, 0, S1()); }
EssQ ess_Px(const Rat& eps) { return make_ess(1, 0, 0, 1, 0, eps, S1()); }
EssQ ess_I_sigma(const ScalarExt& sigma) {
  if (sigma.is_zero()) throw std::domain_error("ess_I_sigma: sigma must be nonzero");
  EssQ e = ess_identity<ScalarExt>();
  e.sigma = sigma;
  return e;
}
EssQ ess_rot(const Rat& c, const Rat& s) {
  if (c * c + s * s != 1) throw std::domain_error("ess_rot: need c^2+s^2=1");
  return make_ess(c, s, -s, c, 0, 0, S1());
}

FullElement full_identity() { return {ess_identity<ScalarExt>(), SolutionSum()}; }

FullElement compose(const FullElement& a, const FullElement& b) {
  FullElement r;
  r.ess = compose(a.ess, b.ess);
  r.shift = b.shift + apply_solution(inverse(b.ess), a.shift);
  return r;
}

FullElement inverse(const FullElement& a) {
  FullElement r;
  r.ess = inverse(a.ess);
  r.shift = -apply_solution(a.ess, a.shift);
  return r;
}

ApplyPointResult apply_point(const FullElement& phi, const Rat& t, const Rat& x, const Rat& u) {
  const EssQ& e = phi.ess;
  ScalarExt den = e.A.c * ScalarExt(t) + e.A.d;
  if (den.is_zero()) throw std::domain_error("apply_point: point lies on the excluded locus");
  ApplyPointResult out;
  ScalarExt num_t = e.A.a * ScalarExt(t) + e.A.b;
  ScalarExt xs = ScalarExt(x) + e.lambda.l1 * ScalarExt(t) + e.lambda.l0;
  out.t = num_t / den;
  out.x = xs / den;
  try {
    Rat denr = rat_of(den, "gamma t + delta");
    Rat xsr = rat_of(xs, "x + l1 t + l0");
    Rat l1 = rat_of(e.lambda.l1, "lambda1");
    Rat gam = rat_of(e.A.c, "gamma");
    Rat expo = gam * xsr * xsr / (4 * denr) - l1 * x / 2 - l1 * l1 * t / 4;
    ScalarExt pref = e.sigma * ScalarExt::sqrt_of(rat_abs(denr)) * ScalarExt::exp_of(expo);
    ScalarExt base = ScalarExt(u);
    if (!phi.shift.is_zero()) base += phi.shift.eval(t, x);
    out.u = pref * base;
  } catch (const std::domain_error& err) {
    std::ostringstream os;
    os << "sigma*sqrt|gamma*t+delta|*exp(gamma*(x+l1*t+l0)^2/(4*(gamma*t+delta))"
          "-l1*x/2-l1^2*t/4)*(u+h): not a ScalarExt value (" << err.what() << ")";
    out.u_certificate = os.str();
  }
  return out;
}

HeatExpr apply_expr(const EssQ& phi, const HeatExpr& f) {
  if (f.is_zero()) return f;
  Rat al = rat_of(phi.A.a, "alpha"), be = rat_of(phi.A.b, "beta");
  Rat ga = rat_of(phi.A.c, "gamma"), de = rat_of(phi.A.d, "delta");
  Rat l1 = rat_of(phi.lambda.l1, "lambda1"), l0 = rat_of(phi.lambda.l0, "lambda0");

  // arguments of f: Tst = (delta t - beta)/(alpha - gamma t),
  //                 Xst = x/(alpha - gamma t) - l1 Tst - l0
  Poly2 t = Poly2::t(), x = Poly2::x();
  Poly2 Np = t.scaled(de) - Poly2(be);        // delta t - beta
  Poly2 Dp = Poly2(al) - t.scaled(ga);        // alpha - gamma t
  RatFunc N{Np}, D{Dp};
  RatFunc Tst = N / D;
  RatFunc Xst = RatFunc(x) / D - RatFunc(l1) * Tst - RatFunc(l0);

  RatFunc A2 = f.A().subst(Tst, Xst);
  RatFunc g2 = f.g().subst(Tst, Xst) + RatFunc(x * x)
                   .operator*(RatFunc(ga)) / (RatFunc(Rat(4)) * D) -
               RatFunc(l1) * RatFunc(x) / (RatFunc(Rat(2)) * D) +
               RatFunc(l1 * l1 / 4) * Tst + RatFunc(l0 * l1 / 2);

  // pulled-back power factors: B(Tst) = (a N + b D)/D
  struct Pending {
    AffineT base;
    Rat exponent;
    int orig_sign;
  };
  std::vector<Pending> pend;
  Rat dshare(0);  // total exponent on D from the factors, plus the -1/2 prefactor
  auto affine_of = [](const Poly2& p) {
    Rat a(0), b(0);
    for (const auto& [m, c] : p.terms()) {
      if (m == Mono{1, 0}) a = c;
      if (m == Mono{0, 0}) b = c;
    }
    return AffineT(a, b);
  };
  for (const auto& fac : f.factors()) {
    Poly2 P = Np.scaled(fac.base.a) + Dp.scaled(fac.base.b);
    if (P.is_zero() || P.deg_x() > 0 || P.deg_t() > 1)
      throw std::domain_error("apply_expr: factor pullback degenerated");
    pend.push_back({affine_of(P), fac.exponent, fac.sign});
    dshare -= fac.exponent;
  }
  dshare -= Rat(1, 2);  // the 1/sqrt|gamma t - alpha| prefactor

  // choose the canonical component: anchor must satisfy D != 0 and
  // sign_orig * P/D > 0 for every pulled-back factor
  std::vector<Rat> roots;
  AffineT Daff = affine_of(Dp);
  if (auto r = Daff.root()) roots.push_back(*r);
  for (const auto& p : pend)
    if (auto r = p.base.root()) roots.push_back(*r);
  auto valid = [&](const Rat& tv) {
    Rat dv = Daff.eval(tv);
    if (dv == 0) return false;
    for (const auto& p : pend) {
      Rat pv = p.base.eval(tv);
      if (pv == 0) return false;
      if (sgn(pv) * sgn(dv) * p.orig_sign < 0) return false;
    }
    return true;
  };
  Rat anchor = HeatExpr::canonical_anchor(roots);
  if (!valid(anchor)) {
    // walk the components: candidates between and beyond all roots
    std::vector<Rat> cands;
    std::sort(roots.begin(), roots.end());
    if (!roots.empty()) {
      cands.push_back(roots.front() - 1);
      for (size_t i = 0; i + 1 < roots.size(); ++i)
        cands.push_back((roots[i] + roots[i + 1]) / 2);
      cands.push_back(roots.back() + 1);
    } else {
      cands.push_back(Rat(1));
    }
    bool found = false;
    for (const auto& cv : cands)
      if (valid(cv)) {
        anchor = cv;
        found = true;
        break;
      }
    if (!found) throw std::domain_error("apply_expr: transformed solution has empty domain");
  }

  std::vector<PowerFactor> factors;
  int sD = sgn(Daff.eval(anchor));
  if (Daff.a == 0 && Daff.b != 0) {
    // gamma == 0: D is the constant alpha; fold into c via normalize
    factors.push_back(PowerFactor{AffineT(Rat(0), Daff.b), dshare, sD});
  } else {
    factors.push_back(PowerFactor{Daff, dshare, sD});
  }
  for (const auto& p : pend) {
    int s1 = p.orig_sign * sD;
    factors.push_back(PowerFactor{p.base, p.exponent, s1});
  }
  HeatExpr out(f.c() * phi.sigma, A2, std::move(factors), g2);
  return out;
}

SolutionSum apply_solution(const EssQ& phi, const SolutionSum& f) {
  SolutionSum out;
  for (const auto& term : f.terms()) {
    if (!term.heat_residual().is_zero())
      throw std::domain_error("apply_solution: input residual is not zero");
    HeatExpr img = apply_expr(phi, term);
    if (!img.heat_residual().is_zero())
      throw std::logic_error("apply_solution: transformed residual is not zero");
    out.add(img);
  }
  return out;
}

SolutionSum apply_solution(const FullElement& phi, const SolutionSum& f) {
  return apply_solution(phi.ess, f + phi.shift);
}

int jacobian_sign(const EssQ& phi, const Rat& t, const Rat& /*x*/) {
  ScalarExt den = phi.A.c * ScalarExt(t) + phi.A.d;
  int sd = den.sign();
  if (sd == 0) throw std::domain_error("jacobian_sign: point lies on the excluded locus");
  return phi.sigma.sign() * sd;
}

bool is_central(const EssQ& phi) {
  EssQ id = ess_identity<ScalarExt>();
  return phi.A == id.A && phi.lambda == id.lambda && !phi.sigma.is_zero();
}

// ---- exp map ---------------------------------------------------------------

EssQ exp_ess_exact(const AlgElement& X, const ExpParam& par) {
  const Rat &p = X[iPt], &d = X[iD], &k = X[iK], &g = X[iGx], &b = X[iPx], &i = X[iI];

  if (par.kind == ExpParam::QuarterTurns) {
    AlgElement qp = AlgElement::Qplus();
    if (!(X == qp))
      throw std::domain_error("exp_ess_exact: quarter turns require the pure Q+ direction");
    static const Rat C[4] = {Rat(1), Rat(0), Rat(-1), Rat(0)};
    static const Rat S[4] = {Rat(0), Rat(1), Rat(0), Rat(-1)};
    long m = ((par.turns % 4) + 4) % 4;
    return ess_rot(C[m], S[m]);
  }

  if (par.kind == ExpParam::DilationScale) {
    if (p != 0 || k != 0 || d == 0)
      throw std::domain_error("exp_ess_exact: scale parameter requires the D family");
    if (par.q <= 0) throw std::domain_error("exp_ess_exact: scale must be positive");
    Rat q = par.q;
    Rat a1 = g / d, b1 = b / d, c1 = i / d;
    Rat l1 = a1 * (q - 1);
    Rat l0 = b1 * (1 - Rat(1) / q);
    auto qpow = rat_pow_exact(q, c1 + a1 * b1 / 2);
    if (!qpow)
      throw std::domain_error(
          "exp_ess_exact: sigma = q^(c + ab/2) leaves ScalarExt for this direction");
    ScalarExt sigma = *qpow * ScalarExt::exp_of(-a1 * b1 * (q - 1) / 2);
    return EssQ{{ScalarExt(q), S0(), S0(), ScalarExt(Rat(1) / q)},
                {ScalarExt(l1), ScalarExt(l0)},
                sigma};
  }

  // rational parameter
  const Rat& eps = par.eps;
  if (d == 0 && k == 0 && p == 0) {
    // radical direction: exp(eps (g Gx + b Px + i I))
    Rat l1 = g * eps, l0 = b * eps;
    ScalarExt sigma = ScalarExt::exp_of(i * eps - g * b * eps * eps / 4);
    return EssQ{{S1(), S0(), S0(), S1()}, {ScalarExt(l1), ScalarExt(l0)}, sigma};
  }
  if (d == 0 && k == 0) {
    // P^t family
    Rat a1 = g / p, b1 = b / p, c1 = i / p, e1 = eps * p;
    Rat l1 = a1 * e1;
    Rat l0 = b1 * e1 + a1 * e1 * e1 / 2;
    ScalarExt sigma =
        ScalarExt::exp_of(c1 * e1 - a1 * a1 * e1 * e1 * e1 / 12 - a1 * b1 * e1 * e1 / 4);
    return EssQ{{S1(), ScalarExt(e1), S0(), S1()}, {ScalarExt(l1), ScalarExt(l0)}, sigma};
  }
  if (d == 0 && p == 0 && k != 0) {
    // K family by conjugation with K': Ad(K'^{-1}) maps it into the P^t family
    AlgElement Xp;
    Xp[iPt] = k;
    Xp[iGx] = b;
    Xp[iPx] = -g;
    Xp[iI] = i;
    EssQ inner = exp_ess_exact(Xp, par);
    EssQ kp = ess_Kprime();
    return compose(kp, compose(inner, inverse(kp)));
  }
  throw std::domain_error("exp_ess_exact: direction not supported in exact mode");
}

EssF exp_ess_float(const AlgElement& X, double eps) {
  double p = to_double(X[iPt]), d = to_double(X[iD]), k = to_double(X[iK]);
  double g = to_double(X[iGx]), b = to_double(X[iPx]), ii = to_double(X[iI]);

  // state: A (row-major 4), lambda (2), and 3 tracked point trajectories
  // (t, x, w) with w = log of the u-prefactor along the flow
  struct State {
    double A[4];
    double lam[2];
    double traj[3][3];
  };
  const double starts[3][2] = {{1.0 / 7, 1.0 / 11}, {2.0 / 7, 3.0 / 11}, {5.0 / 7, -4.0 / 11}};
  auto deriv = [&](const State& s, State& ds) {
    // Adot = M X * A with M = (d p; -k -d)
    ds.A[0] = d * s.A[0] + p * s.A[2];
    ds.A[1] = d * s.A[1] + p * s.A[3];
    ds.A[2] = -k * s.A[0] - d * s.A[2];
    ds.A[3] = -k * s.A[1] - d * s.A[3];
    ds.lam[0] = g * s.A[0] + b * s.A[2];
    ds.lam[1] = g * s.A[1] + b * s.A[3];
    for (int j = 0; j < 3; ++j) {
      double t = s.traj[j][0], x = s.traj[j][1];
      ds.traj[j][0] = p + 2 * d * t + k * t * t;
      ds.traj[j][1] = d * x + k * t * x + g * t + b;
      ds.traj[j][2] = -d / 2 - k * (x * x + 2 * t) / 4 - g * x / 2 + ii;
    }
  };
  auto integrate = [&](int steps) {
    State s{};
    s.A[0] = s.A[3] = 1;
    for (int j = 0; j < 3; ++j) {
      s.traj[j][0] = starts[j][0];
      s.traj[j][1] = starts[j][1];
      s.traj[j][2] = 0;
    }
    double h = eps / steps;
    auto axpy = [](State& y, double a, const State& x) {
      for (int i2 = 0; i2 < 4; ++i2) y.A[i2] += a * x.A[i2];
      y.lam[0] += a * x.lam[0];
      y.lam[1] += a * x.lam[1];
      for (int j = 0; j < 3; ++j)
        for (int c = 0; c < 3; ++c) y.traj[j][c] += a * x.traj[j][c];
    };
    for (int n = 0; n < steps; ++n) {
      State k1{}, k2{}, k3{}, k4{}, tmp;
      deriv(s, k1);
      tmp = s;
      axpy(tmp, h / 2, k1);
      deriv(tmp, k2);
      tmp = s;
      axpy(tmp, h / 2, k2);
      deriv(tmp, k3);
      tmp = s;
      axpy(tmp, h, k3);
      deriv(tmp, k4);
      axpy(s, h / 6, k1);
      axpy(s, h / 3, k2);
      axpy(s, h / 3, k3);
      axpy(s, h / 6, k4);
    }
    return s;
  };
  int steps = 512;
  State s1 = integrate(steps), s2 = integrate(2 * steps);
  for (int round = 0; round < 5; ++round) {
    double diff = 0;
    for (int i2 = 0; i2 < 4; ++i2) diff = std::max(diff, std::abs(s1.A[i2] - s2.A[i2]));
    diff = std::max(diff, std::abs(s1.lam[0] - s2.lam[0]));
    diff = std::max(diff, std::abs(s1.lam[1] - s2.lam[1]));
    if (diff < 1e-12) break;
    steps *= 2;
    s1 = s2;
    s2 = integrate(2 * steps);
  }
  const State& s = s2;

  EssF out;
  out.A = {s.A[0], s.A[1], s.A[2], s.A[3]};
  out.lambda = {s.lam[0], s.lam[1]};
  // recover sigma from a tracked trajectory kept away from the pole
  out.sigma = 0;
  for (int j = 0; j < 3; ++j) {
    double t0 = starts[j][0], x0 = starts[j][1];
    double den = s.A[2] * t0 + s.A[3];
    if (std::abs(den) < 1e-3) continue;
    double xs = x0 + s.lam[0] * t0 + s.lam[1];
    double E = s.A[2] * xs * xs / (4 * den) - s.lam[0] * x0 / 2 - s.lam[0] * s.lam[0] * t0 / 4;
    out.sigma = std::exp(s.traj[j][2]) / (std::sqrt(std::abs(den)) * std::exp(E));
    break;
  }
  if (out.sigma == 0) throw std::domain_error("exp_ess_float: all tracked points hit the pole");
  return out;
}

bool is_in_exp_ess(const EssQ& phi) {
  if (phi.sigma.sign() <= 0) return false;
  EssQ mE = ess_J();
  if (phi.A == mE.A) return true;
  return scalar_sum_cmp(phi.A.a, phi.A.d, Rat(-2)) > 0;
}

bool is_in_exp_ess_float(const EssF& phi, double tol) {
  if (!(phi.sigma > 0)) return false;
  double tr = phi.A.a + phi.A.d;
  if (tr > -2 - tol) return true;
  return std::abs(phi.A.a + 1) < tol && std::abs(phi.A.d + 1) < tol &&
         std::abs(phi.A.b) < tol && std::abs(phi.A.c) < tol;
}

ConjecturalVerdict is_in_exp_full_conjectural(const FullElement& phi) {
  return {is_in_exp_ess(phi.ess), !phi.shift.is_zero()};
}

PseudoDiscreteResult is_pseudo_discrete(const EssQ& phi, int samples, uint64_t seed) {
  PseudoDiscreteResult res;
  EssQ mE = ess_J();
  if (phi.sigma.sign() > 0 && phi.A == mE.A) {
    res.verdict = PseudoDiscreteResult::True;
    res.certificate = "sigma > 0 and F-part = -E: composition flips the trace of every "
                      "hyperbolic/parabolic F-part with trace <= -2 into trace >= 2";
    return res;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(0, 3), den(1, 3);
  for (int it = 0; it < samples; ++it) {
    // Psi in G_id \ exp: F-part = -(L(c) D(q) U(b)) with c, b >= 0, trace <= -2
    Rat c(small(rng), den(rng)), b(small(rng), den(rng));
    Rat q(small(rng) + 1, den(rng));
    EssQ psi = compose(ess_K(-c), compose(ess_D_scale(q), ess_Pt(b)));
    psi = compose(ess_J(), psi);  // multiply the matrix by -E, sigma stays 1
    psi.lambda = {ScalarExt(Rat(small(rng), 2)), ScalarExt(Rat(-small(rng), 3))};
    if (is_in_exp_ess(psi)) continue;  // skip -E itself and similar edge draws
    EssQ prod = compose(phi, psi);
    if (!is_in_exp_ess(prod)) {
      res.verdict = PseudoDiscreteResult::False;
      res.witness = psi;
      res.certificate = "found Psi outside exp with phi o Psi outside exp";
      return res;
    }
  }
  res.verdict = PseudoDiscreteResult::Unknown;
  res.certificate = "no witness among the sampled non-exp elements";
  return res;
}

// ---- determining equations --------------------------------------------------

DeterminingData determining_from(const EssQ& phi) {
  Rat al = rat_of(phi.A.a, "alpha"), be = rat_of(phi.A.b, "beta");
  Rat ga = rat_of(phi.A.c, "gamma"), de = rat_of(phi.A.d, "delta");
  Rat l1 = rat_of(phi.lambda.l1, "lambda1"), l0 = rat_of(phi.lambda.l0, "lambda0");
  Poly2 t = Poly2::t(), x = Poly2::x();
  Poly2 denp = t.scaled(ga) + Poly2(de);
  RatFunc den{denp};
  DeterminingData d;
  d.T = RatFunc(t.scaled(al) + Poly2(be)) / den;
  Poly2 xs = x + t.scaled(l1) + Poly2(l0);
  d.X = RatFunc(xs) / den;
  RatFunc E = RatFunc(xs * xs).operator*(RatFunc(ga)) / (RatFunc(Rat(4)) * den) -
              RatFunc(x.scaled(l1 / 2)) - RatFunc(t.scaled(l1 * l1 / 4));
  std::vector<PowerFactor> fs;
  if (ga == 0) {
    fs.push_back(PowerFactor{AffineT(Rat(0), de), Rat(1, 2), de > 0 ? 1 : -1});
  } else {
    Rat root = -de / ga;
    Rat anchor = HeatExpr::canonical_anchor({root});
    int sgn_at = sgn(ga * anchor + de);
    fs.push_back(PowerFactor{AffineT(ga, de), Rat(1, 2), sgn_at});
  }
  d.U1 = HeatExpr(phi.sigma, RatFunc(Rat(1)), fs, E);
  return d;
}

bool verify_determining(const DeterminingData& d) {
  // nondegeneracy
  if (d.T.diff_t().is_zero() || d.X.diff_x().is_zero() || d.U1.is_zero()) return false;
  if (!d.T.diff_x().is_zero()) return false;
  RatFunc Xx = d.X.diff_x();
  if (Xx * Xx != d.T.diff_t()) return false;
  // U1_x / U1 = A_x/A + g_x  (t-only factors do not contribute)
  RatFunc logdx = d.U1.A().diff_x() / d.U1.A() + d.U1.g().diff_x();
  if (logdx != -(d.X.diff_t()) / (RatFunc(Rat(2)) * Xx)) return false;
  return d.U1.reciprocal().heat_residual().is_zero();
}

// ---- elementary words and pushforwards --------------------------------------

std::string Move::str() const {
  std::ostringstream os;
  switch (kind) {
    case Pt: os << "Pt(" << x.str() << ")"; break;
    case K: os << "K(" << x.str() << ")"; break;
    case D: os << "D(q=" << x.str() << ")"; break;
    case Gx: os << "Gx(" << x.str() << ")"; break;
    case Px: os << "Px(" << x.str() << ")"; break;
    case Rot: os << "Rot(c=" << x.str() << ",s=" << y.str() << ")"; break;
    case Sig: os << "Sig(" << sig.str() << ")"; break;
  }
  return os.str();
}

QMat6 move_ad(const Move& m) {
  QMat6 M = qmat_identity();
  QuadExt e = m.x;
  QuadExt half(Rat(1, 2)), quarter(Rat(1, 4)), two(Rat(2));
  switch (m.kind) {
    case Move::Pt:
      // D -> D - 2e Pt; K -> K - e D + e^2 Pt; Gx -> Gx - e Px
      M[iPt][iD] = -(two * e);
      M[iPt][iK] = e * e;
      M[iD][iK] = -e;
      M[iPx][iGx] = -e;
      break;
    case Move::K:
      // D -> D + 2e K; Pt -> Pt + e D + e^2 K; Px -> Px + e Gx
      M[iK][iD] = two * e;
      M[iD][iPt] = e;
      M[iK][iPt] = e * e;
      M[iGx][iPx] = e;
      break;
    case Move::D: {
      // q = e^eps: Pt -> q^2 Pt, K -> q^-2 K, Gx -> q^-1 Gx, Px -> q Px
      QuadExt q = m.x, qi = q.inverse();
      M[iPt][iPt] = q * q;
      M[iK][iK] = qi * qi;
      M[iGx][iGx] = qi;
      M[iPx][iPx] = q;
      break;
    }
    case Move::Gx:
      // Pt -> Pt + e Px - e^2/4 I; D -> D + e Gx; Px -> Px - e/2 I
      M[iPx][iPt] = e;
      M[iI][iPt] = -(quarter * e * e);
      M[iGx][iD] = e;
      M[iI][iPx] = -(half * e);
      break;
    case Move::Px:
      // D -> D - e Px; K -> K - e Gx - e^2/4 I; Gx -> Gx + e/2 I
      M[iPx][iD] = -e;
      M[iGx][iK] = -e;
      M[iI][iK] = -(quarter * e * e);
      M[iI][iGx] = half * e;
      break;
    case Move::Rot: {
      QuadExt c = m.x, s = m.y;
      QuadExt c2 = c * c - s * s, s2 = two * c * s;
      QuadExt one(Rat(1));
      // on the f part (columns Pt, D, K)
      M[iPt][iPt] = half * (one + c2);
      M[iD][iPt] = half * s2;
      M[iK][iPt] = half * (one - c2);
      M[iPt][iD] = -s2;
      M[iD][iD] = c2;
      M[iK][iD] = s2;
      M[iPt][iK] = half * (one - c2);
      M[iD][iK] = -(half * s2);
      M[iK][iK] = half * (one + c2);
      // on the radical: Px -> c Px + s Gx, Gx -> -s Px + c Gx
      M[iPx][iPx] = c;
      M[iGx][iPx] = s;
      M[iPx][iGx] = -s;
      M[iGx][iGx] = c;
      break;
    }
    case Move::Sig:
      break;  // central, trivial action
  }
  return M;
}

EssQ move_element(const Move& m) {
  auto se = [](const QuadExt& v) { return v.to_scalar_ext(); };
  switch (m.kind) {
    case Move::Pt:
      return EssQ{{S1(), se(m.x), S0(), S1()}, {S0(), S0()}, S1()};
    case Move::K:
      return EssQ{{S1(), S0(), se(-m.x), S1()}, {S0(), S0()}, S1()};
    case Move::D:
      return EssQ{{se(m.x), S0(), S0(), se(m.x.inverse())}, {S0(), S0()}, S1()};
    case Move::Gx:
      return EssQ{{S1(), S0(), S0(), S1()}, {se(m.x), S0()}, S1()};
    case Move::Px:
      return EssQ{{S1(), S0(), S0(), S1()}, {S0(), se(m.x)}, S1()};
    case Move::Rot:
      return EssQ{{se(m.x), se(m.y), se(-m.y), se(m.x)}, {S0(), S0()}, S1()};
    case Move::Sig:
      return ess_I_sigma(m.sig);
  }
  throw std::logic_error("move_element: unreachable");
}

namespace {

QuadExt quad_of(const ScalarExt& s) { return QuadExt::from_scalar_ext(s); }

// word for a lower-triangular SL2 matrix (p, 0; m, 1/p)
void f_word_lower(std::vector<Move>& out, QuadExt p, QuadExt m) {
  QuadExt one(Rat(1));
  if (p.sign() < 0) {
    out.push_back(Move{Move::Rot, QuadExt(Rat(-1)), QuadExt(Rat(0)), ScalarExt()});  // J
    p = -p;
    m = -m;
  }
  QuadExt mp = m / p;
  if (!mp.is_zero()) out.push_back(Move{Move::K, -mp, QuadExt(), ScalarExt()});
  if (!(p == one)) out.push_back(Move{Move::D, p, QuadExt(), ScalarExt()});
}

// word for an SL2 matrix (entries in one quadratic field), composition order
void f_word(std::vector<Move>& out, QuadExt a, QuadExt b, QuadExt c, QuadExt d) {
  QuadExt one(Rat(1));
  if (a == one && b.is_zero() && c.is_zero() && d == one) return;
  if (a.is_zero()) {
    // M = B o K' with B = M * K'^{-1} = (-b, 0; -d, c) lower triangular
    f_word_lower(out, -b, -d);
    out.push_back(Move{Move::Rot, QuadExt(Rat(0)), QuadExt(Rat(-1)), ScalarExt()});  // K'
    return;
  }
  if (a.sign() < 0) {
    out.push_back(Move{Move::Rot, QuadExt(Rat(-1)), QuadExt(Rat(0)), ScalarExt()});  // J
    f_word(out, -a, -b, -c, -d);
    return;
  }
  // a > 0: M = K(-c/a) o D(a) o Pt(b/a)
  QuadExt ca = c / a, ba = b / a;
  if (!ca.is_zero()) out.push_back(Move{Move::K, -ca, QuadExt(), ScalarExt()});
  if (!(a == one)) out.push_back(Move{Move::D, a, QuadExt(), ScalarExt()});
  if (!ba.is_zero()) out.push_back(Move{Move::Pt, ba, QuadExt(), ScalarExt()});
}

}  // namespace

std::vector<Move> decompose_word(const EssQ& phi) {
  std::vector<Move> out;
  f_word(out, quad_of(phi.A.a), quad_of(phi.A.b), quad_of(phi.A.c), quad_of(phi.A.d));
  QuadExt l1 = quad_of(phi.lambda.l1), l0 = quad_of(phi.lambda.l0);
  if (!l1.is_zero()) out.push_back(Move{Move::Gx, l1, QuadExt(), ScalarExt()});
  if (!l0.is_zero()) out.push_back(Move{Move::Px, l0, QuadExt(), ScalarExt()});
  // fix sigma with a central factor so the word reproduces phi exactly
  EssQ w = word_element(out);
  ScalarExt fix = phi.sigma / w.sigma;
  if (!(fix == S1())) out.push_back(Move{Move::Sig, QuadExt(), QuadExt(), fix});
  return out;
}

QMat6 word_ad(const std::vector<Move>& word) {
  QMat6 M = qmat_identity();
  for (const auto& m : word) M = qmat_mul(M, move_ad(m));
  return M;
}

EssQ word_element(const std::vector<Move>& word) {
  EssQ e = ess_identity<ScalarExt>();
  for (auto it = word.rbegin(); it != word.rend(); ++it) e = compose(move_element(*it), e);
  return e;
}

QVec6 pushforward_q(const EssQ& phi, const QVec6& v) {
  return qmat_apply(word_ad(decompose_word(phi)), v);
}

AlgElement pushforward(const EssQ& phi, const AlgElement& X) {
  QVec6 img = pushforward_q(phi, to_qvec(X));
  AlgElement out;
  for (size_t i = 0; i < 6; ++i) {
    if (!img[i].is_rational())
      throw std::domain_error("pushforward: image leaves Q^6 for this element");
    out[i] = img[i].rational_value();
  }
  return out;
}

}  // namespace heatsym
