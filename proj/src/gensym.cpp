#include "heatsym/gensym.hpp"

#include <sstream>

namespace heatsym {

namespace {

Rat binom(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  Rat r(1);
  for (int i = 0; i < k; ++i) r = r * Rat(n - i) / Rat(i + 1);
  return r;
}

Rat factorial(int n) {
  Rat r(1);
  for (int i = 2; i <= n; ++i) r *= Rat(i);
  return r;
}

}  // namespace

GenSymOp GenSymOp::term(int k, int l, const Rat& c) {
  if (k < 0 || l < 0) throw std::domain_error("GenSymOp: negative exponent");
  GenSymOp t;
  t.set(k, l, c);
  return t;
}

void GenSymOp::set(int k, int l, const Rat& c) {
  if (c == 0)
    coeffs_.erase({k, l});
  else
    coeffs_[{k, l}] = c;
}

GenSymOp GenSymOp::operator+(const GenSymOp& o) const {
  GenSymOp r = *this;
  for (const auto& [kl, c] : o.coeffs_) {
    auto it = r.coeffs_.find(kl);
    Rat v = (it == r.coeffs_.end() ? Rat(0) : it->second) + c;
    r.set(kl.first, kl.second, v);
  }
  return r;
}

GenSymOp GenSymOp::operator-(const GenSymOp& o) const { return *this + (-o); }

GenSymOp GenSymOp::operator-() const {
  GenSymOp r = *this;
  for (auto& [kl, c] : r.coeffs_) c = -c;
  return r;
}

GenSymOp GenSymOp::scaled(const Rat& k) const {
  GenSymOp r;
  if (k == 0) return r;
  for (const auto& [kl, c] : coeffs_) r.coeffs_[kl] = c * k;
  return r;
}

std::string GenSymOp::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [kl, c] : coeffs_) {
    if (!first) os << " + ";
    os << rat_str(c) << "*Q{" << kl.first << "," << kl.second << "}";
    first = false;
  }
  return os.str();
}

GenSymOp product(const GenSymOp& P, const GenSymOp& Q) {
  // G^k D^l * G^k' D^l' = sum_i (i!/2^i) C(l,i) C(k',i) G^{k+k'-i} D^{l+l'-i}
  GenSymOp out;
  for (const auto& [kl, c] : P.coeffs()) {
    for (const auto& [kl2, c2] : Q.coeffs()) {
      int k = kl.first, l = kl.second, kp = kl2.first, lp = kl2.second;
      int top = std::min(l, kp);
      for (int i = 0; i <= top; ++i) {
        Rat coef = factorial(i) / rat_pow(Rat(2), i) * binom(l, i) * binom(kp, i) * c * c2;
        auto key = std::make_pair(k + kp - i, l + lp - i);
        auto it = out.coeffs_.find(key);
        Rat v = (it == out.coeffs_.end() ? Rat(0) : it->second) + coef;
        out.set(key.first, key.second, v);
      }
    }
  }
  return out;
}

GenSymOp op_commutator(const GenSymOp& P, const GenSymOp& Q) {
  return product(P, Q) - product(Q, P);
}

GenSymOp vf_bracket(const GenSymOp& P, const GenSymOp& Q) {
  return product(Q, P) - product(P, Q);
}

GenSymOp commutator_closed(int k, int l, int kp, int lp) {
  if (k < 0 || l < 0 || kp < 0 || lp < 0)
    throw std::domain_error("commutator_closed: negative exponent");
  GenSymOp out;
  for (int i = 0; i <= std::min(k, lp); ++i) {
    Rat c = factorial(i) / rat_pow(Rat(2), i) * binom(k, i) * binom(lp, i);
    out = out + GenSymOp::term(k + kp - i, l + lp - i, c);
  }
  for (int i = 0; i <= std::min(kp, l); ++i) {
    Rat c = factorial(i) / rat_pow(Rat(2), i) * binom(kp, i) * binom(l, i);
    out = out - GenSymOp::term(k + kp - i, l + lp - i, c);
  }
  return out;
}

namespace {

// G e = t * d_x e + (x/2) e stays a single-term HeatExpr
HeatExpr apply_G(const HeatExpr& e) {
  HeatExpr dx = e.diff(Var::x);
  // both terms share factor list and g, so they merge
  SolutionSum s(dx.mul_ratfunc(RatFunc::t()));
  s.add(e.mul_ratfunc(RatFunc::x() * RatFunc(Rat(1, 2))));
  if (s.is_zero()) return HeatExpr();
  if (s.terms().size() != 1) throw std::logic_error("apply_G: terms failed to merge");
  return s.terms()[0];
}

HeatExpr apply_monomial(int k, int l, const HeatExpr& e) {
  HeatExpr cur = e;
  for (int i = 0; i < l; ++i) cur = cur.diff(Var::x);
  for (int i = 0; i < k; ++i) cur = apply_G(cur);
  return cur;
}

}  // namespace

SolutionSum gensym_apply(const GenSymOp& P, const HeatExpr& e) {
  if (!e.heat_residual().is_zero())
    throw std::domain_error("gensym_apply: input is not a heat solution");
  SolutionSum out;
  for (const auto& [kl, c] : P.coeffs())
    out.add(apply_monomial(kl.first, kl.second, e).scaled(ScalarExt(c)));
  for (const auto& term : out.terms())
    if (!term.heat_residual().is_zero())
      throw std::logic_error("gensym_apply: output residual is not zero");
  return out;
}

SolutionSum gensym_apply(const GenSymOp& P, const SolutionSum& e) {
  SolutionSum out;
  for (const auto& term : e.terms()) out = out + gensym_apply(P, term);
  return out;
}

GenSymOp from_lie(const AlgElement& X) {
  GenSymOp out;
  out = out + GenSymOp::term(0, 2, -X[iPt]);
  out = out + (GenSymOp::term(1, 1, Rat(-2)) + GenSymOp::term(0, 0, Rat(-1, 2))).scaled(X[iD]);
  out = out + GenSymOp::term(2, 0, -X[iK]);
  out = out + GenSymOp::term(1, 0, -X[iGx]);
  out = out + GenSymOp::term(0, 1, -X[iPx]);
  out = out + GenSymOp::term(0, 0, X[iI]);
  return out;
}

DimLambdaResult dim_lambda(int n) {
  if (n < 0) throw std::domain_error("dim_lambda: n must be nonnegative");
  DimLambdaResult res;
  res.dim = n + 1;
  for (int k = 0; k <= n; ++k) {
    GenSymOp b = GenSymOp::term(k, n - k, Rat(1));
    // verify each basis element maps heat polynomials to solutions
    for (int j = 0; j <= 2 * n; ++j) {
      SolutionSum img = gensym_apply(b, HeatExpr::from_ratfunc(heat_polynomial(j)));
      if (!img.residual_zero()) throw std::logic_error("dim_lambda: basis verification failed");
    }
    res.basis.push_back(b);
  }
  return res;
}

RatFunc heat_polynomial(int n) {
  if (n < 0) throw std::domain_error("heat_polynomial: n must be nonnegative");
  RatFunc h0(Rat(1)), h1 = RatFunc::x();
  if (n == 0) return h0;
  if (n == 1) return h1;
  RatFunc prev = h0, cur = h1;
  for (int m = 1; m < n; ++m) {
    RatFunc next = RatFunc::x() * cur + RatFunc(Rat(2 * m)) * RatFunc::t() * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace heatsym
