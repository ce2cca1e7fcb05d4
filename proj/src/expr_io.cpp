#include "heatsym/expr_io.hpp"

#include <cctype>
#include <optional>
#include <variant>

namespace heatsym {

namespace {

// Intermediate parse value: either a bare rational function or a full
// HeatExpr. Keeping the rational case separate lets exp(...) and sums work
// without premature classification.
struct Value {
  std::variant<RatFunc, HeatExpr> v;
  bool is_rf() const { return v.index() == 0; }
  const RatFunc& rf() const { return std::get<0>(v); }
  const HeatExpr& he() const { return std::get<1>(v); }
  HeatExpr to_he() const { return is_rf() ? HeatExpr::from_ratfunc(rf()) : he(); }
};

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(pos, std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    skip();
    if (s.compare(pos, w.size(), w) == 0) {
      // must not continue as an identifier
      size_t end = pos + w.size();
      if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
        return false;
      pos = end;
      return true;
    }
    return false;
  }
  BigInt integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, "expected integer");
    return BigInt(s.substr(start, pos - start));
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(const std::string& text) : lex{text} {}

  Value parse_input(std::optional<std::pair<bool, Rat>>* tag) {
    Value v = expr();
    if (tag && lex.peek() == '{') *tag = parse_tag();
    if (!lex.eof()) throw ParseError(lex.pos, "trailing input");
    return v;
  }

  std::pair<bool, Rat> parse_tag() {  // (is_lower_bound, bound): {t>c} -> (true, c)
    lex.expect('{');
    if (!lex.accept_word("t")) throw ParseError(lex.pos, "expected 't' in domain tag");
    bool lower;
    if (lex.accept('>'))
      lower = true;
    else if (lex.accept('<'))
      lower = false;
    else
      throw ParseError(lex.pos, "expected '<' or '>' in domain tag");
    Rat c = signed_rational();
    lex.expect('}');
    return {lower, c};
  }

  Rat signed_rational() {
    bool neg = lex.accept('-');
    BigInt n = lex.integer();
    BigInt d(1);
    if (lex.accept('/')) d = lex.integer();
    if (d == 0) throw ParseError(lex.pos, "zero denominator");
    Rat r(n, d);
    return neg ? Rat(-r) : r;
  }

  Value expr() {
    bool neg = lex.accept('-');
    Value acc = term();
    if (neg) acc = negate(acc);
    while (true) {
      if (lex.accept('+'))
        acc = add(acc, term(), +1);
      else if (lex.accept('-'))
        acc = add(acc, term(), -1);
      else
        break;
    }
    return acc;
  }

  Value term() {
    Value acc = factor();
    while (true) {
      if (lex.accept('*'))
        acc = mul(acc, factor());
      else if (lex.accept('/'))
        acc = div(acc, factor());
      else
        break;
    }
    return acc;
  }

  Value factor() {
    size_t at = lex.pos;
    Value b = base();
    if (lex.accept('^')) {
      Rat e = exponent();
      return power(b, e, at);
    }
    return b;
  }

  Rat exponent() {
    if (lex.accept('(')) {
      Rat r = signed_rational();
      lex.expect(')');
      return r;
    }
    bool neg = lex.accept('-');
    Rat r(lex.integer());
    return neg ? Rat(-r) : r;
  }

  Value base() {
    size_t at = lex.pos;
    if (lex.accept_word("exp")) {
      lex.expect('(');
      Value a = expr();
      lex.expect(')');
      if (!a.is_rf())
        throw ParseError(at, "outside the HeatExpr class: exp of a non-rational-function argument");
      return Value{HeatExpr(ScalarExt(Rat(1)), RatFunc(Rat(1)), {}, a.rf())};
    }
    if (lex.accept('(')) {
      Value a = expr();
      lex.expect(')');
      return a;
    }
    if (lex.accept_word("t")) return Value{RatFunc::t()};
    if (lex.accept_word("x")) return Value{RatFunc::x()};
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Value{RatFunc(Rat(lex.integer()))};
    throw ParseError(lex.pos, "expected a base expression");
  }

  static Value negate(const Value& a) {
    if (a.is_rf()) return Value{-a.rf()};
    return Value{-a.he()};
  }

  Value add(const Value& a, const Value& b, int sign) {
    Value bb = sign < 0 ? negate(b) : b;
    if (a.is_rf() && bb.is_rf()) return Value{a.rf() + bb.rf()};
    HeatExpr ha = a.to_he(), hb = bb.to_he();
    if (ha.is_zero()) return Value{hb};
    if (hb.is_zero()) return Value{ha};
    if (!ha.same_shape(hb))
      throw ParseError(lex.pos,
                       "outside the HeatExpr class: sum of terms with different factor/exp parts");
    SolutionSum s(ha);
    s.add(hb);
    if (s.is_zero()) return Value{RatFunc(Rat(0))};
    if (s.terms().size() != 1)
      throw ParseError(lex.pos, "outside the HeatExpr class: sum does not merge");
    return Value{s.terms()[0]};
  }

  Value mul(const Value& a, const Value& b) {
    if (a.is_rf() && b.is_rf()) return Value{a.rf() * b.rf()};
    return Value{a.to_he() * b.to_he()};
  }

  Value div(const Value& a, const Value& b) {
    if (b.is_rf()) {
      if (b.rf().is_zero()) throw ParseError(lex.pos, "division by zero");
      if (a.is_rf()) return Value{a.rf() / b.rf()};
      return Value{a.he().mul_ratfunc(RatFunc(Rat(1)) / b.rf())};
    }
    return Value{a.to_he() * b.he().reciprocal()};
  }

  Value power(const Value& b, const Rat& e, size_t at) {
    if (e == 0) return Value{RatFunc(Rat(1))};
    if (is_integer(e)) {
      long k = static_cast<long>(rat_num(e).convert_to<long long>());
      if (b.is_rf()) {
        if (b.rf().is_zero() && k < 0) throw ParseError(at, "zero to a negative power");
        return Value{b.rf().pow(k)};
      }
      HeatExpr h = b.he();
      HeatExpr out = HeatExpr::constant(Rat(1));
      HeatExpr base = k < 0 ? h.reciprocal() : h;
      for (long i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
      return Value{out};
    }
    if (rat_den(e) != 2)
      throw ParseError(at, "outside the HeatExpr class: exponent is not a half-integer");
    if (!b.is_rf())
      throw ParseError(at, "outside the HeatExpr class: half-integer power of a structured term");
    const RatFunc& f = b.rf();
    if (!f.is_polynomial() || f.num().deg_x() > 0 || f.num().deg_t() > 1)
      throw ParseError(at, "outside the HeatExpr class: half-integer power of a non-affine base");
    Rat den = f.den().constant_value();
    Rat a(0), c(0);
    for (const auto& [m, v] : f.num().terms()) {
      if (m == Mono{1, 0}) a = v / den;
      if (m == Mono{0, 0}) c = v / den;
    }
    if (a == 0 && c == 0) throw ParseError(at, "half-integer power of zero");
    std::vector<PowerFactor> fs{PowerFactor{AffineT(a, c), e, +1}};
    return Value{HeatExpr(ScalarExt(Rat(1)), RatFunc(Rat(1)), fs, RatFunc(Rat(0)))};
  }
};

}  // namespace

HeatExpr parse_expr(const std::string& text) {
  Parser p(text);
  std::optional<std::pair<bool, Rat>> tag;
  Value v = p.parse_input(&tag);
  HeatExpr e = v.to_he();
  if (tag) {
    // the tag must be consistent with the component carved out by the factors
    DomainComponent d = e.domain();
    if (tag->first) {
      if (d.upper && *d.upper <= tag->second)
        throw ParseError(0, "domain tag contradicts the factor signs");
    } else {
      if (d.lower && *d.lower >= tag->second)
        throw ParseError(0, "domain tag contradicts the factor signs");
    }
  }
  return e;
}

std::string print_expr(const HeatExpr& e) { return e.str(); }

RatFunc parse_ratfunc(const std::string& text) {
  Parser p(text);
  Value v = p.parse_input(nullptr);
  if (!v.is_rf()) {
    const HeatExpr& h = v.he();
    if (h.factors().empty() && h.g().is_zero() && h.c().is_rational())
      return h.A() * RatFunc(h.c().rational_value());
    throw ParseError(0, "expected a rational function");
  }
  return v.rf();
}

}  // namespace heatsym
