#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heatsym/poly2.hpp"

namespace heatsym {

// Rational function num / prod_i p_i^{e_i} in (t, x).
//
// The denominator is kept as a list of primitive factors with positive
// graded-lex leading coefficients (not necessarily irreducible), so the
// expanded denominator is primitive with positive leading coefficient and
// the numerator carries the rational content. Reduction is best effort:
// factors are cancelled by exact-division trials and pairwise gcd
// refinement; zero tests and equality never rely on it (f == 0 iff num == 0,
// f == g by cross-multiplication).
class RatFunc {
 public:
  RatFunc() : num_() {}
  RatFunc(const Rat& c) : num_(c) {}  // NOLINT: implicit by design
  RatFunc(Poly2 num, Poly2 den);      // throws on den == 0
  explicit RatFunc(const Poly2& num) : num_(num) {}

  static RatFunc t() { return RatFunc(Poly2::t()); }
  static RatFunc x() { return RatFunc(Poly2::x()); }

  const Poly2& num() const { return num_; }
  Poly2 den() const;  // expanded product
  const std::vector<std::pair<Poly2, int>>& den_factors() const { return fac_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return fac_.empty(); }
  bool is_constant() const { return fac_.empty() && num_.is_constant(); }
  Rat constant_value() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws on o == 0
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  // exact equality via cross-multiplication
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc pow(long e) const;
  RatFunc diff_t() const;
  RatFunc diff_x() const;

  // Composition f(t_sub, x_sub); throws if the denominator collapses to 0.
  RatFunc subst(const RatFunc& t_sub, const RatFunc& x_sub) const;

  // Exact evaluation; throws domain_error on a pole.
  Rat eval(const Rat& tv, const Rat& xv) const;
  double eval(double tv, double xv) const;

  std::string str() const;

 private:
  void push_factor(const Poly2& p, int e);  // p nonconstant primitive
  void normalize();
  RatFunc diff(bool by_t) const;
  Poly2 num_;
  std::vector<std::pair<Poly2, int>> fac_;
};

enum class Var { t, x };

inline RatFunc ratfunc_diff(const RatFunc& f, Var v) {
  return v == Var::t ? f.diff_t() : f.diff_x();
}

}  // namespace heatsym
