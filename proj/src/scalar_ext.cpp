#include "heatsym/scalar_ext.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <sstream>
#include <stdexcept>

namespace heatsym {

namespace {
using Float100 = boost::multiprecision::cpp_bin_float_100;

Float100 to_f100(const Rat& r) {
  return Float100(rat_num(r)) / Float100(rat_den(r));
}
}  // namespace

ScalarExt::ScalarExt(Rat r, BigInt s, Rat q) : r_(std::move(r)), s_(std::move(s)), q_(std::move(q)) {
  if (s_ <= 0) throw std::domain_error("ScalarExt: radicand must be positive");
  normalize();
}

void ScalarExt::normalize() {
  if (r_ == 0) {
    s_ = 1;
    q_ = 0;
    return;
  }
  // pull square factors out of s_
  for (BigInt d = 2; d <= SQUAREFREE_TRIAL_BOUND && d * d <= s_; ++d) {
    BigInt dd = d * d;
    while (s_ % dd == 0) {
      s_ /= dd;
      r_ *= Rat(d);
    }
  }
  if (auto root = exact_sqrt(s_)) {
    r_ *= Rat(*root);
    s_ = 1;
  }
}

ScalarExt ScalarExt::sqrt_of(const Rat& v) {
  if (v < 0) throw std::domain_error("ScalarExt::sqrt_of: negative argument");
  if (v == 0) return ScalarExt();
  // sqrt(p/q) = sqrt(p*q)/q
  BigInt p = rat_num(v), q = rat_den(v);
  return ScalarExt(Rat(1, q), p * q, Rat(0));
}

Rat ScalarExt::rational_value() const {
  if (!is_rational()) throw std::domain_error("ScalarExt: not rational");
  return r_;
}

ScalarExt ScalarExt::operator*(const ScalarExt& o) const {
  if (r_ == 0 || o.r_ == 0) return ScalarExt();
  BigInt g = gcd(s_, o.s_);
  return ScalarExt(r_ * o.r_ * Rat(g), (s_ / g) * (o.s_ / g), q_ + o.q_);
}

ScalarExt ScalarExt::inverse() const {
  if (r_ == 0) throw std::domain_error("ScalarExt: inverse of zero");
  // 1/(r sqrt(s) e^q) = (1/(r s)) sqrt(s) e^{-q}
  return ScalarExt(Rat(1) / (r_ * Rat(s_)), s_, -q_);
}

ScalarExt ScalarExt::operator/(const ScalarExt& o) const { return *this * o.inverse(); }

ScalarExt ScalarExt::operator+(const ScalarExt& o) const {
  if (r_ == 0) return o;
  if (o.r_ == 0) return *this;
  if (s_ != o.s_ || q_ != o.q_)
    throw std::domain_error("ScalarExt: addition of incompatible radical/exponential parts");
  return ScalarExt(r_ + o.r_, s_, q_);
}

int ScalarExt::cmp_rat(const Rat& m) const {
  if (is_rational()) return r_ < m ? -1 : (r_ == m ? 0 : 1);
  if (r_ == 0) return 0 < m ? -1 : (m == 0 ? 0 : 1);
  int sv = sgn(r_), sm = sgn(m);
  if (sv != sm) {
    if (sm == 0) return sv;
    if (sv == 0) return -sm;
    return sv;
  }
  // same strict sign; compare squares (kills the radical)
  Rat lhs = r_ * r_ * Rat(s_);  // times e^{2q}
  Rat rhs = m * m;
  if (q_ == 0) {
    // lhs vs rhs exactly; equality would force s_ to be a rational square,
    // impossible for squarefree s_ > 1
    int c = lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
    return sv > 0 ? c : -c;
  }
  // e^{2q} is transcendental for rational q != 0, so no tie is possible.
  Float100 lf = to_f100(lhs) * exp(Float100(2) * to_f100(q_));
  Float100 rf = to_f100(rhs);
  int c = lf < rf ? -1 : 1;
  return sv > 0 ? c : -c;
}

double ScalarExt::to_double() const {
  Float100 v = to_f100(r_) * sqrt(Float100(s_)) * exp(to_f100(q_));
  return v.convert_to<double>();
}

std::string ScalarExt::str() const {
  std::ostringstream os;
  os << rat_str(r_);
  if (s_ != 1) os << "*sqrt(" << s_.str() << ")";
  if (q_ != 0) os << "*exp(" << rat_str(q_) << ")";
  return os.str();
}

ScalarExt rat_pow_half(const Rat& base, long k) {
  if (base <= 0) throw std::domain_error("rat_pow_half: base must be positive");
  if (k == 0) return ScalarExt(Rat(1));
  long whole = k / 2;
  long half = k - 2 * whole;  // in {-1, 0, 1}
  ScalarExt out(rat_pow(base, whole));
  if (half == 1) out *= ScalarExt::sqrt_of(base);
  if (half == -1) out *= ScalarExt::sqrt_of(base).inverse();
  return out;
}

std::optional<ScalarExt> rat_pow_exact(const Rat& base, const Rat& e) {
  if (base <= 0) return std::nullopt;
  BigInt n = rat_num(e), m = rat_den(e);
  if (m == 1) return ScalarExt(rat_pow(base, static_cast<long>(n.convert_to<long long>())));
  if (m == 2) return rat_pow_half(base, static_cast<long>(n.convert_to<long long>()));
  // need an exact m-th (or m/2-th) root of the base
  unsigned mu = m.convert_to<unsigned>();
  if (auto r = exact_root(base, mu)) {
    if (*r > 0) return ScalarExt(rat_pow(*r, static_cast<long>(n.convert_to<long long>())));
  }
  if (mu % 2 == 0) {
    if (auto r = exact_root(base, mu / 2)) {
      if (*r > 0) return rat_pow_half(*r, static_cast<long>(n.convert_to<long long>()));
    }
  }
  return std::nullopt;
}

int scalar_sum_cmp(const ScalarExt& a, const ScalarExt& b, const Rat& m) {
  if (a.is_zero()) return b.cmp_rat(m);
  if (b.is_zero()) return a.cmp_rat(m);
  if (a.s() == b.s() && a.q() == b.q()) return (a + b).cmp_rat(m);
  if (a.is_rational()) return b.cmp_rat(m - a.rational_value());
  if (b.is_rational()) return a.cmp_rat(m - b.rational_value());
  // incompatible irrationals: their sum is never rational, so no tie
  Float100 v = to_f100(a.r()) * sqrt(Float100(a.s())) * exp(to_f100(a.q())) +
               to_f100(b.r()) * sqrt(Float100(b.s())) * exp(to_f100(b.q())) - to_f100(m);
  if (abs(v) < Float100("1e-60"))
    throw std::domain_error("scalar_sum_cmp: comparison too close to certify");
  return v < 0 ? -1 : 1;
}

}  // namespace heatsym
