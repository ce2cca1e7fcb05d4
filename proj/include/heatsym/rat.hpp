#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace heatsym {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps gcd(|num|,den)=1 and den>0
// as class invariants, which is exactly the canonical form we need.
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

inline int sgn(const Rat& r) { return r.sign(); }
inline int sgn(const BigInt& n) { return n.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// r^e for integer e (e<0 requires r!=0).
inline Rat rat_pow(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  if (r == 0) {
    if (e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
    return Rat(0);
  }
  BigInt n = rat_num(r), d = rat_den(r);
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt np = pow(n, k), dp = pow(d, k);
  if (e < 0) {
    if (np < 0) { np = -np; dp = -dp; }
    return Rat(dp, np);
  }
  return Rat(np, dp);
}

// "p/q" or "p"; also tolerates a leading '+'.
inline Rat parse_rat(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '+') s = s.substr(1);
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
  }
}

inline std::string rat_str(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

// Largest n with n^2 <= v (v >= 0).
inline BigInt isqrt_floor(const BigInt& v) {
  if (v < 0) throw std::domain_error("isqrt_floor: negative");
  return sqrt(v);
}

inline std::optional<BigInt> exact_sqrt(const BigInt& v) {
  if (v < 0) return std::nullopt;
  BigInt r = isqrt_floor(v);
  if (r * r == v) return r;
  return std::nullopt;
}

// Exact integer k-th root if it exists.
inline std::optional<BigInt> exact_root(const BigInt& v, unsigned k) {
  if (k == 0) throw std::domain_error("exact_root: k=0");
  if (v == 0) return BigInt(0);
  bool neg = v < 0;
  if (neg && k % 2 == 0) return std::nullopt;
  BigInt a = abs(v);
  // Newton iteration on integers.
  BigInt x = BigInt(1) << static_cast<unsigned>((msb(a) / k) + 1);
  while (true) {
    BigInt xk1 = pow(x, k - 1);
    BigInt nx = ((k - 1) * x + a / xk1) / k;
    if (nx >= x) break;
    x = nx;
  }
  if (pow(x, k) != a) return std::nullopt;
  return neg ? BigInt(-x) : x;
}

// Exact rational k-th root if it exists.
inline std::optional<Rat> exact_root(const Rat& v, unsigned k) {
  auto n = exact_root(rat_num(v), k);
  if (!n) return std::nullopt;
  auto d = exact_root(rat_den(v), k);
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace heatsym
