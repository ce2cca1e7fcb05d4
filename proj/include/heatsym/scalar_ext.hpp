#pragma once

#include <optional>
#include <string>

#include "heatsym/rat.hpp"

namespace heatsym {

// Exact scalar r * sqrt(s) * e^q with r, q rational and s a positive
// squarefree integer. Closed under multiplication and inversion; addition is
// partial (defined iff the (s, q) parts agree or one operand is zero), which
// is all the group machinery ever needs.
//
// Squarefree reduction of s uses trial division by d = 2, 3, ... up to
// d <= SQUAREFREE_TRIAL_BOUND, then absorbs s if the remainder is a perfect
// square. Any unfactored square part simply stays under the radical; all
// arithmetic and comparisons remain exact either way.
class ScalarExt {
 public:
  static constexpr long SQUAREFREE_TRIAL_BOUND = 100000;

  ScalarExt() : r_(0), s_(1), q_(0) {}
  ScalarExt(const Rat& r) : r_(r), s_(1), q_(0) {}  // NOLINT: implicit by design
  ScalarExt(Rat r, BigInt s, Rat q);

  static ScalarExt sqrt_of(const Rat& v);  // v >= 0
  static ScalarExt exp_of(const Rat& q) { return ScalarExt(Rat(1), BigInt(1), q); }

  const Rat& r() const { return r_; }
  const BigInt& s() const { return s_; }
  const Rat& q() const { return q_; }

  bool is_zero() const { return r_ == 0; }
  bool is_rational() const { return s_ == 1 && q_ == 0; }
  Rat rational_value() const;
  int sign() const { return sgn(r_); }

  ScalarExt operator-() const { return ScalarExt(-r_, s_, q_); }
  ScalarExt operator*(const ScalarExt& o) const;
  ScalarExt operator/(const ScalarExt& o) const;
  ScalarExt inverse() const;
  // Partial addition; throws std::domain_error when the radical/exponential
  // parts are incompatible.
  ScalarExt operator+(const ScalarExt& o) const;
  ScalarExt operator-(const ScalarExt& o) const { return *this + (-o); }

  ScalarExt& operator*=(const ScalarExt& o) { return *this = *this * o; }
  ScalarExt& operator+=(const ScalarExt& o) { return *this = *this + o; }

  bool operator==(const ScalarExt& o) const {
    return r_ == o.r_ && s_ == o.s_ && q_ == o.q_;
  }
  bool operator!=(const ScalarExt& o) const { return !(*this == o); }

  // Sign of (value - m), decided exactly where algebra permits equality and
  // by guarded high-precision evaluation otherwise (e^q for q != 0 is
  // transcendental, so those comparisons are never ties).
  int cmp_rat(const Rat& m) const;

  double to_double() const;
  std::string str() const;

 private:
  void normalize();
  Rat r_;
  BigInt s_;
  Rat q_;
};

inline ScalarExt scalar_mul(const ScalarExt& a, const ScalarExt& b) { return a * b; }

// base^(k/2) for rational base > 0 and integer k.
ScalarExt rat_pow_half(const Rat& base, long k);

// base^e for rational base > 0 when the result stays in ScalarExt
// (integer or half-integer exponent, or base an exact root).
std::optional<ScalarExt> rat_pow_exact(const Rat& base, const Rat& e);

// Sign of (a + b - m). Exact when a and b are compatible; otherwise decided
// by 100-digit evaluation, which cannot tie (distinct radicals and e^q with
// q != 0 are irrational), with a guard band enforced.
int scalar_sum_cmp(const ScalarExt& a, const ScalarExt& b, const Rat& m);

}  // namespace heatsym
