#include "heatsym/heatexpr.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace heatsym {

namespace {

bool is_half_integer(const Rat& r) { return rat_den(r) == 1 || rat_den(r) == 2; }

}  // namespace

std::string DomainComponent::str() const {
  std::ostringstream os;
  if (lower && upper)
    os << "{" << rat_str(*lower) << "<t<" << rat_str(*upper) << "}";
  else if (lower)
    os << "{t>" << rat_str(*lower) << "}";
  else if (upper)
    os << "{t<" << rat_str(*upper) << "}";
  else
    os << "{t in R}";
  return os.str();
}

HeatExpr::HeatExpr(ScalarExt c, RatFunc A, std::vector<PowerFactor> factors, RatFunc g)
    : c_(std::move(c)), A_(std::move(A)), factors_(std::move(factors)), g_(std::move(g)) {
  normalize();
}

HeatExpr HeatExpr::kernel() {
  RatFunc t = RatFunc::t(), x = RatFunc::x();
  PowerFactor f{AffineT(Rat(1), Rat(0)), Rat(-1, 2), +1};
  return HeatExpr(ScalarExt(Rat(1)), RatFunc(Rat(1)), {f}, -(x * x) / (RatFunc(Rat(4)) * t));
}

void HeatExpr::normalize() {
  if (c_.is_zero() || A_.is_zero()) {
    c_ = ScalarExt(Rat(0));
    A_ = RatFunc(Rat(0));
    factors_.clear();
    g_ = RatFunc(Rat(0));
    return;
  }
  // fold constant factors, make bases primitive, merge proportional bases
  std::map<std::pair<Rat, Rat>, std::pair<Rat, int>> merged;  // (a,b) -> (exp, sign)
  for (auto& f : factors_) {
    if (!is_half_integer(f.exponent))
      throw std::domain_error("HeatExpr: exponent must be a half-integer");
    if (f.sign != 1 && f.sign != -1) throw std::domain_error("HeatExpr: bad factor sign");
    if (f.exponent == 0) continue;
    Rat a = f.base.a, b = f.base.b;
    if (a == 0) {
      // constant base: (sign*b)^s folds into c
      Rat v = Rat(f.sign) * b;
      if (v <= 0) throw std::domain_error("HeatExpr: empty domain (nonpositive constant base)");
      long k = static_cast<long>(rat_num(f.exponent * 2).convert_to<long long>());
      c_ *= rat_pow_half(v, k);
      continue;
    }
    // primitive base with a > 0: base = kappa * base0
    BigInt L = rat_den(a) / gcd(rat_den(a), rat_den(b)) * rat_den(b);
    BigInt na = rat_num(a) * (L / rat_den(a)), nb = rat_num(b) * (L / rat_den(b));
    Rat kappa(gcd(abs(na), abs(nb)), L);
    if (a < 0) kappa = -kappa;
    Rat a0 = a / kappa, b0 = b / kappa;  // integer, coprime, a0 > 0
    long k = static_cast<long>(rat_num(f.exponent * 2).convert_to<long long>());
    c_ *= rat_pow_half(rat_abs(kappa), k);
    int sign0 = f.sign * (kappa < 0 ? -1 : 1);
    auto key = std::make_pair(a0, b0);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged[key] = {f.exponent, sign0};
    } else {
      if (it->second.second != sign0)
        throw std::domain_error("HeatExpr: contradictory signs for one base (empty domain)");
      it->second.first += f.exponent;
    }
  }
  factors_.clear();
  for (const auto& [ab, es] : merged) {
    if (es.first == 0) continue;
    factors_.push_back(PowerFactor{AffineT(ab.first, ab.second), es.first, es.second});
  }
  std::sort(factors_.begin(), factors_.end(), [](const PowerFactor& l, const PowerFactor& r) {
    if (l.base.a != r.base.a) return l.base.a < r.base.a;
    return l.base.b < r.base.b;
  });
  // check the slab is nonempty
  domain();
  // pull numerator content of A into c
  Rat cont = A_.num().content();
  if (A_.num().leading_coeff_grlex() < 0) cont = -cont;
  if (cont != 1) {
    A_ = A_ * RatFunc(Rat(1) / cont);
    c_ *= ScalarExt(cont);
  }
  // for polynomial g, pull the additive rational constant into c
  if (!g_.is_zero() && g_.is_polynomial()) {
    Rat c0(0);
    Rat d = g_.den().constant_value();
    for (const auto& [m, v] : g_.num().terms())
      if (m == Mono{0, 0}) c0 = v / d;
    if (c0 != 0) {
      g_ -= RatFunc(c0);
      c_ *= ScalarExt::exp_of(c0);
    }
  }
}

bool HeatExpr::operator==(const HeatExpr& o) const {
  return c_ == o.c_ && A_ == o.A_ && factors_ == o.factors_ && g_ == o.g_;
}

HeatExpr HeatExpr::operator-() const { return scaled(ScalarExt(Rat(-1))); }

HeatExpr HeatExpr::scaled(const ScalarExt& k) const { return HeatExpr(c_ * k, A_, factors_, g_); }

HeatExpr HeatExpr::mul_ratfunc(const RatFunc& f) const {
  return HeatExpr(c_, A_ * f, factors_, g_);
}

HeatExpr HeatExpr::operator*(const HeatExpr& o) const {
  std::vector<PowerFactor> fs = factors_;
  fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
  return HeatExpr(c_ * o.c_, A_ * o.A_, std::move(fs), g_ + o.g_);
}

HeatExpr HeatExpr::reciprocal() const {
  if (is_zero()) throw std::domain_error("HeatExpr: reciprocal of zero");
  std::vector<PowerFactor> fs = factors_;
  for (auto& f : fs) f.exponent = -f.exponent;
  return HeatExpr(c_.inverse(), RatFunc(Rat(1)) / A_, std::move(fs), -g_);
}

HeatExpr HeatExpr::diff(Var v) const {
  if (is_zero()) return *this;
  // d e = (A_v + A * L_v) * (c prod B^s e^g)  with
  // L_t = sum s_i a_i / B_i + g_t  and  L_x = g_x
  RatFunc L = ratfunc_diff(g_, v);
  if (v == Var::t) {
    for (const auto& f : factors_) {
      RatFunc B(Poly2::t().scaled(f.base.a) + Poly2(f.base.b));
      L += RatFunc(f.exponent) * RatFunc(f.base.a) / B;
    }
  }
  RatFunc newA = ratfunc_diff(A_, v) + A_ * L;
  return HeatExpr(c_, newA, factors_, g_);
}

RatFunc HeatExpr::heat_residual() const {
  if (is_zero()) return RatFunc(Rat(0));
  RatFunc gt = g_.diff_t(), gx = g_.diff_x(), gxx = gx.diff_x();
  RatFunc Lt = gt;
  for (const auto& f : factors_) {
    RatFunc B(Poly2::t().scaled(f.base.a) + Poly2(f.base.b));
    Lt += RatFunc(f.exponent) * RatFunc(f.base.a) / B;
  }
  RatFunc Ax = A_.diff_x();
  RatFunc lhs = A_.diff_t() + A_ * Lt;
  RatFunc rhs = Ax.diff_x() + RatFunc(Rat(2)) * Ax * gx + A_ * (gxx + gx * gx);
  return (lhs - rhs) / A_;
}

DomainComponent HeatExpr::domain() const {
  DomainComponent d;
  for (const auto& f : factors_) {
    auto r = f.base.root();
    if (!r) continue;
    // sign*(a t + b) > 0 with a > 0: sign=+1 -> t > r, sign=-1 -> t < r
    if (f.sign > 0) {
      if (!d.lower || *r > *d.lower) d.lower = *r;
    } else {
      if (!d.upper || *r < *d.upper) d.upper = *r;
    }
  }
  if (d.lower && d.upper && *d.lower >= *d.upper)
    throw std::domain_error("HeatExpr: empty domain component");
  if (!A_.den().is_constant()) d.excluded.push_back(A_.den());
  if (!A_.num().is_constant()) d.excluded.push_back(A_.num());  // zeros of A excluded for 1/A uses
  if (!g_.den().is_constant()) d.excluded.push_back(g_.den());
  return d;
}

ScalarExt HeatExpr::eval(const Rat& t, const Rat& x) const {
  if (is_zero()) return ScalarExt(Rat(0));
  ScalarExt out = c_ * ScalarExt(A_.eval(t, x)) * ScalarExt::exp_of(g_.eval(t, x));
  for (const auto& f : factors_) {
    Rat b = Rat(f.sign) * f.base.eval(t);
    if (b <= 0) throw std::domain_error("HeatExpr::eval: point outside the domain component");
    long k = static_cast<long>(rat_num(f.exponent * 2).convert_to<long long>());
    out *= rat_pow_half(b, k);
  }
  return out;
}

double HeatExpr::eval_double(double t, double x) const {
  if (is_zero()) return 0.0;
  double out = c_.to_double() * A_.eval(t, x) * std::exp(g_.eval(t, x));
  for (const auto& f : factors_) {
    double b = f.sign * (to_double(f.base.a) * t + to_double(f.base.b));
    out *= std::pow(b, to_double(f.exponent));
  }
  return out;
}

Rat HeatExpr::canonical_anchor(const std::vector<Rat>& roots) {
  auto hits = [&](const Rat& c) {
    for (const auto& r : roots)
      if (r == c) return true;
    return false;
  };
  if (!hits(Rat(1))) return Rat(1);
  if (!hits(Rat(-1))) return Rat(-1);
  Rat m = roots.front();
  for (const auto& r : roots) m = std::max(m, r);
  return m + 1;
}

std::string HeatExpr::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool lead = true;
  auto sep = [&]() {
    if (!lead) os << " * ";
    lead = false;
  };
  if (!(c_.r() == 1 && c_.is_rational())) {
    // print c in-grammar: r * s^(1/2) * exp(q)
    sep();
    os << "(" << rat_str(c_.r()) << ")";
    if (c_.s() != 1) os << " * " << c_.s().str() << "^(1/2)";
    if (c_.q() != 0) os << " * exp(" << rat_str(c_.q()) << ")";
  }
  if (!(A_.is_constant() && A_.constant_value() == 1)) {
    sep();
    os << "(" << A_.str() << ")";
  }
  for (const auto& f : factors_) {
    sep();
    std::string base;
    {
      std::ostringstream bs;
      if (f.sign < 0) bs << "-(";
      bool w = false;
      if (f.base.a != 0) {
        if (f.base.a != 1) {
          bs << rat_str(f.base.a) << "*";
        }
        bs << "t";
        w = true;
      }
      if (f.base.b != 0) {
        if (w) bs << (f.base.b > 0 ? " + " : " - ") << rat_str(rat_abs(f.base.b));
        else bs << rat_str(f.base.b);
      }
      if (f.sign < 0) bs << ")";
      base = bs.str();
    }
    os << "(" << base << ")^(" << rat_str(f.exponent) << ")";
  }
  if (!g_.is_zero()) {
    sep();
    os << "exp(" << g_.str() << ")";
  }
  if (lead) os << "1";
  // domain tag when factors carve out a component
  try {
    DomainComponent d = domain();
    if (d.lower)
      os << " {t>" << rat_str(*d.lower) << "}";
    else if (d.upper)
      os << " {t<" << rat_str(*d.upper) << "}";
  } catch (const std::domain_error&) {
  }
  return os.str();
}

SolutionSum::SolutionSum(std::vector<HeatExpr> terms) {
  for (auto& t : terms) add(std::move(t));
}

void SolutionSum::add(HeatExpr e) {
  if (e.is_zero()) return;
  for (auto& t : terms_) {
    if (!t.same_shape(e)) continue;
    // merge: c1 A1 + c2 A2 with equal (s, q) parts of c when possible
    const ScalarExt &c1 = t.c(), &c2 = e.c();
    if (c1.s() == c2.s() && c1.q() == c2.q()) {
      RatFunc A = t.A() * RatFunc(c1.r()) + e.A() * RatFunc(c2.r());
      HeatExpr merged(ScalarExt(Rat(1), c1.s(), c1.q()), A, t.factors(), t.g());
      t = merged;
      if (t.is_zero()) {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const HeatExpr& h) { return h.is_zero(); }),
                     terms_.end());
      }
      return;
    }
  }
  terms_.push_back(std::move(e));
}

SolutionSum SolutionSum::operator+(const SolutionSum& o) const {
  SolutionSum out = *this;
  for (const auto& t : o.terms_) out.add(t);
  return out;
}

SolutionSum SolutionSum::operator-() const {
  SolutionSum out;
  for (const auto& t : terms_) out.add(-t);
  return out;
}

SolutionSum SolutionSum::scaled(const ScalarExt& k) const {
  SolutionSum out;
  if (k.is_zero()) return out;
  for (const auto& t : terms_) out.add(t.scaled(k));
  return out;
}

SolutionSum SolutionSum::diff(Var v) const {
  SolutionSum out;
  for (const auto& t : terms_) out.add(t.diff(v));
  return out;
}

bool SolutionSum::residual_zero() const {
  for (const auto& t : terms_)
    if (!t.heat_residual().is_zero()) return false;
  return true;
}

ScalarExt SolutionSum::eval(const Rat& t, const Rat& x) const {
  ScalarExt acc(Rat(0));
  for (const auto& e : terms_) acc += e.eval(t, x);
  return acc;
}

double SolutionSum::eval_double(double t, double x) const {
  double acc = 0;
  for (const auto& e : terms_) acc += e.eval_double(t, x);
  return acc;
}

std::string SolutionSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << terms_[i].str();
  }
  return os.str();
}

RatFunc burgers_residual(const RatFunc& v) { return v.diff_t() + v * v.diff_x() - v.diff_x().diff_x(); }

}  // namespace heatsym
