#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heatsym/rat.hpp"

namespace heatsym {

// Exponent pair (deg_t, deg_x).
using Mono = std::pair<int, int>;

// Bivariate polynomial in (t, x) over Rat, sparse map representation.
// Invariant: no stored zero coefficients.
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(const Rat& c) {
    if (c != 0) terms_[{0, 0}] = c;
  }
  static Poly2 t(int deg = 1) { return monomial(deg, 0, Rat(1)); }
  static Poly2 x(int deg = 1) { return monomial(0, deg, Rat(1)); }
  static Poly2 monomial(int dt, int dx, const Rat& c);

  const std::map<Mono, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  int deg_t() const;
  int deg_x() const;

  Poly2 operator-() const;
  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
  Poly2& operator-=(const Poly2& o) { return *this = *this - o; }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
  bool operator==(const Poly2& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly2& o) const { return terms_ != o.terms_; }

  Poly2 scaled(const Rat& c) const;
  Poly2 diff_t() const;
  Poly2 diff_x() const;
  Poly2 pow(unsigned e) const;

  Rat eval(const Rat& tv, const Rat& xv) const;

  // Leading coefficient in graded lexicographic order (t > x).
  Rat leading_coeff_grlex() const;

  // Content (gcd of coefficients as a positive rational); 0 for the zero poly.
  Rat content() const;
  // this == content() * primitive_part(); primitive part has integer coprime
  // coefficients and positive grlex leading coefficient.
  Poly2 primitive_part() const;

  std::string str() const;

 private:
  void prune();
  std::map<Mono, Rat> terms_;
};

// Polynomial gcd, primitive-Euclid on the main variable t with recursive
// coefficient gcds. Returns a primitive polynomial with positive grlex
// leading coefficient (1 if coprime). Best effort only: correctness of the
// callers never depends on gcds being maximal.
Poly2 poly_gcd(const Poly2& a, const Poly2& b);

// Exact quotient p / q when q divides p, nullopt otherwise. Decided by
// greedy leading-term division in graded-lex order.
std::optional<Poly2> poly_divide_exact(const Poly2& p, const Poly2& q);

}  // namespace heatsym
