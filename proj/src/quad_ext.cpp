#include "heatsym/quad_ext.hpp"

#include <sstream>
#include <stdexcept>

namespace heatsym {

QuadExt::QuadExt(Rat a, Rat b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ <= 0) throw std::domain_error("QuadExt: radicand must be positive");
  if (b_ == 0) {
    d_ = 1;
    return;
  }
  if (d_ != 1) {
    // reduce the radicand to squarefree form through ScalarExt
    ScalarExt s(Rat(1), d_, Rat(0));
    b_ *= s.r();
    d_ = s.s();
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

QuadExt QuadExt::sqrt_of(const Rat& v) {
  if (v <= 0) throw std::domain_error("QuadExt::sqrt_of: argument must be positive");
  ScalarExt s = ScalarExt::sqrt_of(v);
  return QuadExt(Rat(0), s.r(), s.s());
}

Rat QuadExt::rational_value() const {
  if (!is_rational()) throw std::domain_error("QuadExt: not rational");
  return a_;
}

BigInt QuadExt::merge_d(const QuadExt& o) const {
  if (d_ == 1) return o.d_;
  if (o.d_ == 1 || o.d_ == d_) return d_;
  throw std::domain_error("QuadExt: mixed radicals " + d_.str() + " and " + o.d_.str());
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
  BigInt d = merge_d(o);
  return QuadExt(a_ + o.a_, b_ + o.b_, d);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
  BigInt d = merge_d(o);
  return QuadExt(a_ * o.a_ + b_ * o.b_ * Rat(d), a_ * o.b_ + b_ * o.a_, d);
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("QuadExt: inverse of zero");
  Rat n = a_ * a_ - b_ * b_ * Rat(d_);
  // n == 0 would force sqrt(d) rational, impossible for squarefree d > 1
  return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt QuadExt::operator/(const QuadExt& o) const { return *this * o.inverse(); }

int QuadExt::sign() const {
  if (b_ == 0) return sgn(a_);
  if (a_ == 0) return sgn(b_);
  int sa = sgn(a_), sb = sgn(b_);
  if (sa == sb) return sa;
  Rat cmp = a_ * a_ - b_ * b_ * Rat(d_);  // sign decides which term dominates
  return cmp > 0 ? sa : sb;
}

ScalarExt QuadExt::to_scalar_ext() const {
  if (b_ == 0) return ScalarExt(a_);
  if (a_ == 0) return ScalarExt(b_, d_, Rat(0));
  throw std::domain_error("QuadExt: mixed value " + str() + " is outside ScalarExt");
}

QuadExt QuadExt::from_scalar_ext(const ScalarExt& s) {
  if (s.q() != 0) throw std::domain_error("QuadExt: exponential part not representable");
  if (s.s() == 1) return QuadExt(s.r());
  return QuadExt(Rat(0), s.r(), s.s());
}

double QuadExt::to_double() const {
  double root = std::sqrt(static_cast<double>(d_.convert_to<double>()));
  return heatsym::to_double(a_) + heatsym::to_double(b_) * root;
}

std::string QuadExt::str() const {
  std::ostringstream os;
  os << rat_str(a_);
  if (b_ != 0) os << (b_ > 0 ? "+" : "") << rat_str(b_) << "*sqrt(" << d_.str() << ")";
  return os.str();
}

}  // namespace heatsym
