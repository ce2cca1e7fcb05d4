#include "heatsym/poly2.hpp"

#include <algorithm>
#include <sstream>

namespace heatsym {

namespace {

// grlex on (deg_t, deg_x) with t > x
bool grlex_less(const Mono& a, const Mono& b) {
  int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a.first < b.first;
}

BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return gcd(a, b);
}

BigInt lcm_big(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd_big(a, b) * b);
}

// dense univariate polynomial over the integers (used only inside poly_gcd);
// integer-primitive arithmetic keeps the Euclidean chains from exploding
using UPoly = std::vector<BigInt>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  utrim(r);
  return r;
}

BigInt ucontent(const UPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = gcd_big(g, c);
  return g;
}

UPoly upp(UPoly p) {  // primitive part with positive leading coefficient
  utrim(p);
  if (p.empty()) return p;
  BigInt g = ucontent(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

// pseudo-remainder: lc(b)^(da-db+1) a mod b, integer arithmetic
UPoly uprem(UPoly a, const UPoly& b) {
  utrim(a);
  while (a.size() >= b.size() && !a.empty()) {
    BigInt la = a.back();
    size_t shift = a.size() - b.size();
    for (auto& c : a) c *= b.back();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    utrim(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {  // primitive PRS over Z
  a = upp(std::move(a));
  b = upp(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = upp(uprem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Poly2 with integer coefficients as a dense poly in t over Z[x]
std::vector<UPoly> to_tcoeffs_z(const Poly2& p) {
  // clear denominators first
  BigInt L = 1;
  for (const auto& [m, c] : p.terms()) L = lcm_big(L, rat_den(c));
  std::vector<UPoly> out(static_cast<size_t>(p.deg_t() + 1));
  if (p.is_zero()) return {};
  for (const auto& [m, c] : p.terms()) {
    auto& up = out[static_cast<size_t>(m.first)];
    if (static_cast<int>(up.size()) <= m.second)
      up.resize(static_cast<size_t>(m.second + 1), BigInt(0));
    up[static_cast<size_t>(m.second)] = rat_num(c) * (L / rat_den(c));
  }
  return out;
}

Poly2 from_tcoeffs_z(const std::vector<UPoly>& v) {
  Poly2 out;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v[i].size(); ++j)
      if (v[i][j] != 0)
        out += Poly2::monomial(static_cast<int>(i), static_cast<int>(j), Rat(v[i][j]));
  return out;
}

struct BPoly {  // poly in t with Z[x] coefficients; invariant: lead nonzero
  std::vector<UPoly> c;
  void trim() {
    while (!c.empty() && c.back().empty()) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  size_t deg() const { return c.size() - 1; }
  const UPoly& lead() const { return c.back(); }
};

// pseudo-remainder of a by b in t over Z[x]; strips the integer content
// after every reduction step to keep coefficient growth in check
BPoly bprem(BPoly a, const BPoly& b) {
  a.trim();
  while (!a.zero() && a.deg() >= b.deg()) {
    size_t k = a.deg() - b.deg();
    UPoly la = a.lead();
    const UPoly& lb = b.lead();
    BPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size() + k), {});
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = umul(a.c[i], lb);
    for (size_t i = 0; i < b.c.size(); ++i) {
      UPoly s = umul(b.c[i], la);
      UPoly& dst = r.c[i + k];
      if (dst.size() < s.size()) dst.resize(s.size(), BigInt(0));
      for (size_t j = 0; j < s.size(); ++j) dst[j] -= s[j];
      utrim(dst);
    }
    r.trim();
    BigInt ic = 0;
    for (const auto& ci : r.c)
      for (const auto& v : ci) ic = gcd_big(ic, v);
    if (ic > 1)
      for (auto& ci : r.c)
        for (auto& v : ci) v /= ic;
    a = std::move(r);
  }
  return a;
}

UPoly bcontent(const BPoly& a) {
  UPoly g;
  for (const auto& ci : a.c) g = ugcd(g, ci);
  return g;
}

BPoly bdiv_content(BPoly a, const UPoly& g) {
  // divide every coefficient by g (exact); integer long division
  if (g.size() == 1) {
    for (auto& ci : a.c)
      for (auto& v : ci) v /= g[0];
    a.trim();
    return a;
  }
  for (auto& ci : a.c) {
    if (ci.empty()) continue;
    UPoly q(ci.size() >= g.size() ? ci.size() - g.size() + 1 : 0, BigInt(0));
    UPoly r = ci;
    while (r.size() >= g.size() && !r.empty()) {
      BigInt qc = r.back() / g.back();
      size_t shift = r.size() - g.size();
      q[shift] = qc;
      for (size_t i = 0; i < g.size(); ++i) r[i + shift] -= qc * g[i];
      utrim(r);
    }
    ci = std::move(q);
    utrim(ci);
  }
  a.trim();
  return a;
}

}  // namespace

Poly2 Poly2::monomial(int dt, int dx, const Rat& c) {
  Poly2 p;
  if (c != 0) p.terms_[{dt, dx}] = c;
  return p;
}

bool Poly2::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0};
}

Rat Poly2::constant_value() const {
  if (terms_.empty()) return Rat(0);
  return terms_.begin()->second;
}

int Poly2::deg_t() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

int Poly2::deg_x() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

void Poly2::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [m, c] : o.terms_) r.terms_[m] += c;
  r.prune();
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [m, c] : o.terms_) r.terms_[m] -= c;
  r.prune();
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      r.terms_[{m1.first + m2.first, m1.second + m2.second}] += c1 * c2;
  r.prune();
  return r;
}

Poly2 Poly2::scaled(const Rat& c) const {
  Poly2 r;
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

Poly2 Poly2::diff_t() const {
  Poly2 r;
  for (const auto& [m, c] : terms_)
    if (m.first > 0) r.terms_[{m.first - 1, m.second}] = c * m.first;
  return r;
}

Poly2 Poly2::diff_x() const {
  Poly2 r;
  for (const auto& [m, c] : terms_)
    if (m.second > 0) r.terms_[{m.first, m.second - 1}] = c * m.second;
  return r;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 r(Rat(1));
  Poly2 base = *this;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

Rat Poly2::eval(const Rat& tv, const Rat& xv) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_)
    acc += c * rat_pow(tv, m.first) * rat_pow(xv, m.second);
  return acc;
}

Rat Poly2::leading_coeff_grlex() const {
  if (terms_.empty()) return Rat(0);
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return best->second;
}

Rat Poly2::content() const {
  if (terms_.empty()) return Rat(0);
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    num_gcd = gcd_big(num_gcd, rat_num(c));
    den_lcm = lcm_big(den_lcm, rat_den(c));
  }
  return Rat(num_gcd, den_lcm);
}

Poly2 Poly2::primitive_part() const {
  if (terms_.empty()) return *this;
  Rat c = content();
  Poly2 p = scaled(Rat(1) / c);
  if (p.leading_coeff_grlex() < 0) p = -p;
  return p;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  // print in descending grlex order
  std::vector<std::pair<Mono, Rat>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = m.first + m.second > 0;
    bool written = false;
    if (a != 1 || !has_vars) {
      os << rat_str(a);
      written = true;
    }
    if (m.first > 0) {
      if (written) os << "*";
      os << "t";
      if (m.first > 1) os << "^" << m.first;
      written = true;
    }
    if (m.second > 0) {
      if (written) os << "*";
      os << "x";
      if (m.second > 1) os << "^" << m.second;
      written = true;
    }
  }
  return os.str();
}

namespace {

// slices of p as integer polynomials in `main_t ? t : x`, one per degree of
// the other variable, denominators cleared
std::vector<UPoly> var_slices_z(const Poly2& p, bool main_t) {
  BigInt L = 1;
  for (const auto& [m, c] : p.terms()) L = lcm_big(L, rat_den(c));
  std::vector<UPoly> out;
  for (const auto& [m, c] : p.terms()) {
    size_t other = static_cast<size_t>(main_t ? m.second : m.first);
    size_t mine = static_cast<size_t>(main_t ? m.first : m.second);
    if (out.size() <= other) out.resize(other + 1);
    if (out[other].size() <= mine) out[other].resize(mine + 1, BigInt(0));
    out[other][mine] = rat_num(c) * (L / rat_den(c));
  }
  return out;
}

Poly2 from_upoly(const UPoly& g, bool main_t) {
  Poly2 out;
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0)
      out += main_t ? Poly2::monomial(static_cast<int>(i), 0, Rat(g[i]))
                    : Poly2::monomial(0, static_cast<int>(i), Rat(g[i]));
  return out;
}

// gcd when one argument involves a single variable: the gcd then divides
// every slice of the other, so only univariate integer gcds are needed
Poly2 poly_gcd_univar(const Poly2& a, const Poly2& b, bool main_t) {
  UPoly g;
  for (const auto& s : var_slices_z(a, main_t)) g = ugcd(g, s);
  for (const auto& s : var_slices_z(b, main_t)) g = ugcd(g, s);
  return from_upoly(upp(std::move(g)), main_t).primitive_part();
}

}  // namespace

std::optional<Poly2> poly_divide_exact(const Poly2& p, const Poly2& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return Poly2();
  if (q.is_constant()) return p.scaled(Rat(1) / q.constant_value());
  auto leader = [](const Poly2& f) {
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
      if (grlex_less(best->first, it->first)) best = it;
    return best;
  };
  auto lq = leader(q);
  Poly2 rem = p, quot;
  while (!rem.is_zero()) {
    auto lr = leader(rem);
    int dt = lr->first.first - lq->first.first;
    int dx = lr->first.second - lq->first.second;
    if (dt < 0 || dx < 0) return std::nullopt;
    Poly2 term = Poly2::monomial(dt, dx, lr->second / lq->second);
    quot += term;
    rem -= term * q;
  }
  return quot;
}

Poly2 poly_gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return Poly2(Rat(1));
  if (a.deg_x() == 0 || b.deg_x() == 0) return poly_gcd_univar(a, b, true);
  if (a.deg_t() == 0 || b.deg_t() == 0) return poly_gcd_univar(a, b, false);
  BPoly A{to_tcoeffs_z(a)}, B{to_tcoeffs_z(b)};
  A.trim();
  B.trim();
  UPoly ca = bcontent(A), cb = bcontent(B);
  UPoly cg = ugcd(ca, cb);
  A = bdiv_content(A, ca);
  B = bdiv_content(B, cb);
  if (A.deg() < B.deg()) std::swap(A, B);
  while (!B.zero()) {
    BPoly R = bprem(A, B);
    if (!R.zero()) R = bdiv_content(R, bcontent(R));
    A = std::move(B);
    B = std::move(R);
  }
  // gcd = cg * primitive(A)
  BPoly G;
  G.c.reserve(A.c.size());
  for (const auto& ci : A.c) G.c.push_back(umul(ci, cg));
  G.trim();
  return from_tcoeffs_z(G.c).primitive_part();
}

}  // namespace heatsym
