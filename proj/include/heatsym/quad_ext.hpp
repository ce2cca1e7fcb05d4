#pragma once

#include "heatsym/scalar_ext.hpp"

namespace heatsym {

// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)), d a positive
// squarefree integer (d=1 encodes plain rationals). Unlike ScalarExt this is
// a genuine field: closed under addition. Mixing two distinct radicals is an
// error; within one canonicalization run a single radical suffices.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(1) {}
  QuadExt(const Rat& a) : a_(a), b_(0), d_(1) {}  // NOLINT: implicit by design
  QuadExt(Rat a, Rat b, BigInt d);

  static QuadExt sqrt_of(const Rat& v);  // v > 0

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const BigInt& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  Rat rational_value() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt operator+(const QuadExt& o) const;
  QuadExt operator-(const QuadExt& o) const { return *this + (-o); }
  QuadExt operator*(const QuadExt& o) const;
  QuadExt operator/(const QuadExt& o) const;
  QuadExt inverse() const;
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

  bool operator==(const QuadExt& o) const { return (*this - o).is_zero(); }
  bool operator!=(const QuadExt& o) const { return !(*this == o); }

  int sign() const;  // exact

  // Conversion to the multiplicative normal form; requires a pure value
  // (a == 0 or b == 0).
  ScalarExt to_scalar_ext() const;
  static QuadExt from_scalar_ext(const ScalarExt& s);  // requires q == 0

  double to_double() const;
  std::string str() const;

 private:
  BigInt merge_d(const QuadExt& o) const;
  Rat a_, b_;
  BigInt d_;
};

}  // namespace heatsym
