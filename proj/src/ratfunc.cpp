#include "heatsym/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace heatsym {

RatFunc::RatFunc(Poly2 num, Poly2 den) : num_(std::move(num)) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) return;
  if (!den.is_constant()) {
    // user-facing constructor: one real gcd pass, then a single factor
    Poly2 g = poly_gcd(num_, den);
    if (!g.is_constant()) {
      if (auto q = poly_divide_exact(num_, g)) num_ = *q;
      if (auto q = poly_divide_exact(den, g)) den = *q;
    }
  }
  Rat c = den.content();
  if (den.leading_coeff_grlex() < 0) c = -c;
  num_ = num_.scaled(Rat(1) / c);
  den = den.scaled(Rat(1) / c);
  if (!den.is_constant()) push_factor(den, 1);
  normalize();
}

void RatFunc::push_factor(const Poly2& p, int e) {
  for (auto& [q, eq] : fac_) {
    if (q == p) {
      eq += e;
      return;
    }
  }
  fac_.emplace_back(p, e);
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    fac_.clear();
    return;
  }
  // pairwise gcd refinement so shared content between factors is split off
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < fac_.size() && !changed; ++i)
      for (size_t j = i + 1; j < fac_.size() && !changed; ++j) {
        if (fac_[i].first == fac_[j].first) {
          fac_[i].second += fac_[j].second;
          fac_.erase(fac_.begin() + static_cast<long>(j));
          changed = true;
          break;
        }
        Poly2 g = poly_gcd(fac_[i].first, fac_[j].first);
        if (g.is_constant()) continue;
        Poly2 qi = *poly_divide_exact(fac_[i].first, g);
        Poly2 qj = *poly_divide_exact(fac_[j].first, g);
        int ei = fac_[i].second, ej = fac_[j].second;
        fac_.erase(fac_.begin() + static_cast<long>(j));
        fac_[i] = {g, ei + ej};
        // quotients of primitives by a primitive divisor are primitive
        if (!qi.is_constant()) push_factor(qi, ei);
        if (!qj.is_constant()) push_factor(qj, ej);
        changed = true;
      }
  }
  // cancel factors against the numerator by exact-division trials
  for (auto& [p, e] : fac_) {
    while (e > 0) {
      auto q = poly_divide_exact(num_, p);
      if (!q) break;
      num_ = *q;
      --e;
    }
  }
  fac_.erase(std::remove_if(fac_.begin(), fac_.end(), [](const auto& f) { return f.second == 0; }),
             fac_.end());
  std::sort(fac_.begin(), fac_.end(), [](const auto& a, const auto& b) {
    if (a.first.terms().size() != b.first.terms().size())
      return a.first.terms().size() < b.first.terms().size();
    return a.first.terms() < b.first.terms();
  });
}

Poly2 RatFunc::den() const {
  Poly2 d(Rat(1));
  for (const auto& [p, e] : fac_) d *= p.pow(static_cast<unsigned>(e));
  return d;
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("RatFunc: not constant");
  return num_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  // common denominator via the factorwise lcm
  RatFunc r;
  Poly2 left = num_, right = o.num_;
  for (const auto& [p, e] : fac_) {
    int eo = 0;
    for (const auto& [q, eq] : o.fac_)
      if (q == p) eo = eq;
    int m = std::max(e, eo);
    r.push_factor(p, m);
    if (m > e) left *= p.pow(static_cast<unsigned>(m - e));
    if (m > eo) right *= p.pow(static_cast<unsigned>(m - eo));
  }
  for (const auto& [q, eq] : o.fac_) {
    bool seen = false;
    for (const auto& [p, e] : fac_)
      if (p == q) seen = true;
    if (seen) continue;
    r.push_factor(q, eq);
    left *= q.pow(static_cast<unsigned>(eq));
  }
  r.num_ = left + right;
  r.normalize();
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  RatFunc r;
  r.num_ = num_ * o.num_;
  r.fac_ = fac_;
  for (const auto& [q, eq] : o.fac_) r.push_factor(q, eq);
  r.normalize();
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  RatFunc r;
  r.num_ = num_;
  r.fac_ = fac_;
  // o's numerator joins the denominator; o's factors join the numerator
  Poly2 onum = o.num_;
  Rat c = onum.content();
  if (onum.leading_coeff_grlex() < 0) c = -c;
  r.num_ = r.num_.scaled(Rat(1) / c);
  onum = onum.scaled(Rat(1) / c);
  if (!onum.is_constant()) r.push_factor(onum, 1);
  for (const auto& [q, eq] : o.fac_) r.num_ *= q.pow(static_cast<unsigned>(eq));
  r.normalize();
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
  return (num_ * o.den() - o.num_ * den()).is_zero();
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc(Rat(1));
  if (e < 0) {
    if (is_zero()) throw std::domain_error("RatFunc: 0 to a negative power");
    RatFunc inv = RatFunc(Rat(1)) / *this;
    return inv.pow(-e);
  }
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  for (const auto& [p, ep] : fac_) r.push_factor(p, ep * static_cast<int>(e));
  r.normalize();
  return r;
}

RatFunc RatFunc::diff(bool by_t) const {
  // (N / prod p^e)' = (N' prod p - N sum e_i p_i' prod_{j != i} p_j)
  //                   / prod p^{e+1}
  auto d = [&](const Poly2& p) { return by_t ? p.diff_t() : p.diff_x(); };
  RatFunc r;
  Poly2 prod(Rat(1));
  for (const auto& [p, e] : fac_) prod *= p;
  Poly2 acc = d(num_) * prod;
  for (size_t i = 0; i < fac_.size(); ++i) {
    Poly2 rest(Rat(fac_[i].second));
    for (size_t j = 0; j < fac_.size(); ++j)
      if (j != i) rest *= fac_[j].first;
    acc -= num_ * d(fac_[i].first) * rest;
  }
  r.num_ = std::move(acc);
  for (const auto& [p, e] : fac_) r.push_factor(p, e + 1);
  r.normalize();
  return r;
}

RatFunc RatFunc::diff_t() const { return diff(true); }
RatFunc RatFunc::diff_x() const { return diff(false); }

namespace {
RatFunc subst_poly(const Poly2& p, const RatFunc& ts, const RatFunc& xs) {
  // Horner in t with inner Horner in x keeps intermediate growth down
  RatFunc acc(Rat(0));
  int dt = p.deg_t();
  for (int i = dt; i >= 0; --i) {
    RatFunc row(Rat(0));
    int dx = 0;
    for (const auto& [m, c] : p.terms())
      if (m.first == i) dx = std::max(dx, m.second);
    for (int j = dx; j >= 0; --j) {
      Rat c(0);
      auto it = p.terms().find({i, j});
      if (it != p.terms().end()) c = it->second;
      row = row * xs + RatFunc(c);
    }
    acc = acc * ts + row;
  }
  return acc;
}
}  // namespace

RatFunc RatFunc::subst(const RatFunc& t_sub, const RatFunc& x_sub) const {
  RatFunc n = subst_poly(num_, t_sub, x_sub);
  RatFunc out = n;
  for (const auto& [p, e] : fac_) {
    RatFunc ps = subst_poly(p, t_sub, x_sub);
    if (ps.is_zero())
      throw std::domain_error("RatFunc::subst: denominator vanishes identically");
    out = out / ps.pow(e);
  }
  return out;
}

Rat RatFunc::eval(const Rat& tv, const Rat& xv) const {
  Rat d(1);
  for (const auto& [p, e] : fac_) {
    Rat v = p.eval(tv, xv);
    if (v == 0) throw std::domain_error("RatFunc::eval: pole at the given point");
    d *= rat_pow(v, e);
  }
  return num_.eval(tv, xv) / d;
}

double RatFunc::eval(double tv, double xv) const {
  auto evp = [&](const Poly2& p) {
    double acc = 0;
    for (const auto& [m, c] : p.terms()) {
      double term = to_double(c);
      for (int i = 0; i < m.first; ++i) term *= tv;
      for (int i = 0; i < m.second; ++i) term *= xv;
      acc += term;
    }
    return acc;
  };
  double d = 1;
  for (const auto& [p, e] : fac_)
    for (int i = 0; i < e; ++i) d *= evp(p);
  return evp(num_) / d;
}

std::string RatFunc::str() const {
  if (fac_.empty()) return num_.str();
  Poly2 d = den();
  if (d.is_constant()) return num_.str();
  return "(" + num_.str() + ")/(" + d.str() + ")";
}

}  // namespace heatsym
