#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heatsym/ratfunc.hpp"
#include "heatsym/scalar_ext.hpp"

namespace heatsym {

// a*t + b with (a, b) != (0, 0)
struct AffineT {
  Rat a, b;
  AffineT(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a == 0 && b == 0) throw std::domain_error("AffineT: zero form");
  }
  Rat eval(const Rat& t) const { return a * t + b; }
  std::optional<Rat> root() const {
    if (a == 0) return std::nullopt;
    return Rat(-b / a);
  }
  bool operator==(const AffineT& o) const { return a == o.a && b == o.b; }
};

// (sign * (a t + b))^exponent, exponent a nonzero half-integer, the sign
// selecting the domain component on which the base is positive
struct PowerFactor {
  AffineT base;       // primitive: integer coprime coefficients, a > 0 (or a == 0 folded away)
  Rat exponent;       // denominator 1 or 2, nonzero
  int sign;           // +1 or -1
  bool operator==(const PowerFactor& o) const {
    return base == o.base && exponent == o.exponent && sign == o.sign;
  }
};

// Open t-slab on which the expression is classically defined, together with
// the excluded loci coming from denominators.
struct DomainComponent {
  std::optional<Rat> lower, upper;  // open interval (lower, upper), absent = unbounded
  std::vector<Poly2> excluded;      // zero sets of these polynomials are removed
  bool contains_t(const Rat& t) const {
    if (lower && t <= *lower) return false;
    if (upper && t >= *upper) return false;
    return true;
  }
  std::string str() const;
};

// Symbolic solution form  c * A(t,x) * prod_i (sign_i * B_i(t))^{s_i} * exp(g(t,x))
// with c in ScalarExt, A and g rational functions and B_i affine in t.
// Closed under d/dt, d/dx, the point-symmetry action and the recursion
// operators. Zero value is canonically (c=0, A=0, no factors, g=0).
class HeatExpr {
 public:
  HeatExpr() : c_(Rat(0)), A_(Rat(0)) {}
  HeatExpr(ScalarExt c, RatFunc A, std::vector<PowerFactor> factors, RatFunc g);

  static HeatExpr from_ratfunc(const RatFunc& f) {
    return HeatExpr(ScalarExt(Rat(1)), f, {}, RatFunc(Rat(0)));
  }
  static HeatExpr constant(const Rat& c) { return from_ratfunc(RatFunc(c)); }
  // t^{-1/2} exp(-x^2/(4t)) on t > 0  (heat kernel up to constant)
  static HeatExpr kernel();

  const ScalarExt& c() const { return c_; }
  const RatFunc& A() const { return A_; }
  const std::vector<PowerFactor>& factors() const { return factors_; }
  const RatFunc& g() const { return g_; }

  bool is_zero() const { return A_.is_zero(); }
  bool operator==(const HeatExpr& o) const;
  bool operator!=(const HeatExpr& o) const { return !(*this == o); }
  bool same_shape(const HeatExpr& o) const {  // equal factor lists and g
    return factors_ == o.factors_ && g_ == o.g_;
  }

  HeatExpr operator-() const;
  HeatExpr scaled(const ScalarExt& k) const;
  HeatExpr mul_ratfunc(const RatFunc& f) const;
  HeatExpr operator*(const HeatExpr& o) const;
  HeatExpr reciprocal() const;  // throws if zero

  HeatExpr diff(Var v) const;

  // R with (dt - dxx) e = R * e; exact. e solves the heat equation on its
  // component iff R == 0.
  RatFunc heat_residual() const;

  DomainComponent domain() const;

  // Exact evaluation at a rational point of the component.
  ScalarExt eval(const Rat& t, const Rat& x) const;
  double eval_double(double t, double x) const;

  // Canonical anchor t for a set of factor roots: the component containing
  // t=1 when no root equals 1, else t=-1, else to the right of every root.
  static Rat canonical_anchor(const std::vector<Rat>& roots);

  std::string str() const;

 private:
  void normalize();
  ScalarExt c_;
  RatFunc A_;
  std::vector<PowerFactor> factors_;
  RatFunc g_;
};

// Finite formal sum of HeatExpr terms (linear superposition). Terms sharing
// factor list and g are merged; zero terms dropped. Residuals are certified
// termwise: each stored term must itself solve the heat equation for
// residual_zero() to return true. Cross-term cancellation between terms of
// different shapes is not detected; that exactness caveat is deliberate.
class SolutionSum {
 public:
  SolutionSum() = default;
  explicit SolutionSum(HeatExpr e) { add(std::move(e)); }
  explicit SolutionSum(std::vector<HeatExpr> terms);

  const std::vector<HeatExpr>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(HeatExpr e);
  SolutionSum operator+(const SolutionSum& o) const;
  SolutionSum operator-() const;
  SolutionSum scaled(const ScalarExt& k) const;

  SolutionSum diff(Var v) const;
  bool residual_zero() const;  // every term has heat_residual == 0

  ScalarExt eval(const Rat& t, const Rat& x) const;  // throws if terms are incompatible
  double eval_double(double t, double x) const;

  std::string str() const;

 private:
  std::vector<HeatExpr> terms_;
};

// v_t + v v_x - v_xx, exact.
RatFunc burgers_residual(const RatFunc& v);

}  // namespace heatsym
