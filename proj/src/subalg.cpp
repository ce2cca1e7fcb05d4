#include "heatsym/subalg.hpp"

#include <algorithm>
#include <sstream>

namespace heatsym {

namespace {

// ---- exact linear algebra over Q(sqrt(d)) ----------------------------------

void rref(std::vector<QVec6>& rows) {
  size_t r = 0;
  for (size_t col = 0; col < 6 && r < rows.size(); ++col) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    QuadExt inv = rows[r][col].inverse();
    for (size_t j = 0; j < 6; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      QuadExt f = rows[i][col];
      for (size_t j = 0; j < 6; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const QVec6& v) {
                              for (const auto& c : v)
                                if (!c.is_zero()) return false;
                              return true;
                            }),
             rows.end());
}

size_t rank_of(std::vector<QVec6> rows) {
  rref(rows);
  return rows.size();
}

bool span_contains(const std::vector<QVec6>& basis, const QVec6& v) {
  std::vector<QVec6> rows = basis;
  size_t r0 = rank_of(rows);
  rows.push_back(v);
  return rank_of(rows) == r0;
}

bool spans_equal(std::vector<QVec6> a, std::vector<QVec6> b) {
  rref(a);
  rref(b);
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < 6; ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

QVec6 qvec_basis(int i) { return to_qvec(AlgElement::basis(i)); }

bool qvec_is_zero(const QVec6& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

// ---- working state -----------------------------------------------------------

struct Work {
  std::vector<QVec6> basis;
  std::vector<Move> applied;  // application order
  std::vector<std::string> steps;

  void move(const Move& m, const std::string& why) {
    QMat6 M = move_ad(m);
    for (auto& v : basis) v = qmat_apply(M, v);
    applied.push_back(m);
    steps.push_back(why + ": push forward by " + m.str());
  }
  void scale(size_t i, const QuadExt& k, const std::string& why) {
    for (auto& c : basis[i]) c *= k;
    steps.push_back(why + ": scale basis vector " + std::to_string(i + 1) + " by " + k.str());
  }
  void combine(size_t i, const QuadExt& k, size_t j, const std::string& why) {
    for (size_t c = 0; c < 6; ++c) basis[i][c] += k * basis[j][c];
    steps.push_back(why + ": add " + k.str() + " * vector " + std::to_string(j + 1) +
                    " to vector " + std::to_string(i + 1));
  }
  EssQ witness() const {
    // applied m1, m2, ..., mk acts as mk o ... o m1
    std::vector<Move> comp(applied.rbegin(), applied.rend());
    return word_element(comp);
  }
};

// bring the basis to rref and return it (pivots ordered Pt,D,K,Gx,Px,I)
void reduce(Work& w) {
  rref(w.basis);
}

// f-part as a 2x2 matrix: v = p Pt + d D + k K  ->  (d, p; -k, -d)
struct FMat {
  QuadExt a, b, c, d;
};

FMat fmat(const QVec6& v) { return {v[iD], v[iPt], -v[iK], -v[iD]}; }

QuadExt fdisc(const QVec6& v) {  // d^2 - p k; eigenvalues are +-sqrt of this
  return v[iD] * v[iD] - v[iPt] * v[iK];
}

// ---- F-conjugation words for the three sl(2) line types --------------------

// word of F-moves whose pushforward maps the f-line of v onto the target
// direction; returns the factor m with Ad(word) v = m * target + (radical)
// Target encodings: 0 -> Pt, 1 -> D, 2 -> Q+ = Pt + K.

// conjugating matrix B with B M B^{-1} = T acts on f-parts by the same
// formula as the pushforward of the group element with matrix B
void apply_fconj(Work& w, const QuadExt& a, const QuadExt& b, const QuadExt& c, const QuadExt& d,
                 const std::string& why) {
  // decompose B = (a b; c d) into elementary moves and apply in order
  std::vector<Move> moves;
  // reuse the pointgroup decomposition through a ScalarExt element
  EssQ e{{a.to_scalar_ext(), b.to_scalar_ext(), c.to_scalar_ext(), d.to_scalar_ext()},
         {ScalarExt(Rat(0)), ScalarExt(Rat(0))},
         ScalarExt(Rat(1))};
  moves = decompose_word(e);
  for (const auto& m : moves)
    if (m.kind != Move::Sig) w.move(m, why);
}

// primitive integer kernel vector of a rational nilpotent f-matrix
std::pair<BigInt, BigInt> nilpotent_kernel(const FMat& M) {
  Rat a = M.a.rational_value(), b = M.b.rational_value(), c = M.c.rational_value();
  Rat k1, k2;
  if (b != 0) {
    k1 = b;
    k2 = -a;
  } else if (a != 0) {
    // rows (a, 0), (c, -a): kernel of first row: (0,1)
    k1 = 0;
    k2 = 1;
  } else if (c != 0) {
    k1 = 0;
    k2 = 1;
  } else {
    throw std::logic_error("nilpotent_kernel: zero matrix");
  }
  // clear denominators and content
  BigInt n1 = rat_num(k1) * rat_den(k2), n2 = rat_num(k2) * rat_den(k1);
  BigInt g = gcd(abs(n1), abs(n2));
  return {n1 / g, n2 / g};
}

// extended gcd: returns (x, y) with a x + b y = gcd
std::pair<BigInt, BigInt> ext_gcd(BigInt a, BigInt b) {
  BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    BigInt q = a / b, r = a % b;
    a = b;
    b = r;
    BigInt nx = x0 - q * x1, ny = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = nx;
    y1 = ny;
  }
  return {x0, y0};
}

// conjugate the nilpotent f-part of w.basis[idx] to the Pt direction and
// scale the vector so the f-part becomes exactly Pt
void normalize_nilpotent(Work& w, size_t idx) {
  FMat M = fmat(w.basis[idx]);
  auto [w1, w2] = nilpotent_kernel(M);
  if (w1 < 0 || (w1 == 0 && w2 < 0)) {
    w1 = -w1;
    w2 = -w2;
  }
  auto [x, y] = ext_gcd(w1, w2);
  // A^{-1} = (w1 -y; w2 x) has det w1 x + w2 y = 1, A = (x y; -w2 w1)
  QuadExt a{Rat(x)}, b{Rat(y)}, c{Rat(-w2)}, d{Rat(w1)};
  apply_fconj(w, a, b, c, d, "align the nilpotent f-line with Pt");
  QuadExt m = w.basis[idx][iPt];
  if (m.is_zero()) throw std::logic_error("normalize_nilpotent: conjugation failed");
  w.scale(idx, m.inverse(), "normalize the Pt coefficient");
}

// split (hyperbolic) type: conjugate to the D direction; requires the
// discriminant to be a rational square
void normalize_split(Work& w, size_t idx) {
  QuadExt disc = fdisc(w.basis[idx]);
  Rat dv = disc.rational_value();
  auto root = exact_root(dv, 2);
  if (!root) throw IrrationalNormalizationError("split normalization needs sqrt(" + rat_str(dv) + ")");
  Rat r = *root;
  FMat M = fmat(w.basis[idx]);
  Rat a = M.a.rational_value(), bq = M.b.rational_value(), cq = M.c.rational_value();
  // eigenvectors for +r and -r
  auto eig = [&](const Rat& lam) -> std::pair<Rat, Rat> {
    // (a-lam) v1 + b v2 = 0
    if (bq != 0) return {bq, lam - a};
    if (a != lam) return {Rat(0), Rat(1)};
    // row (c, -a-lam)
    if (a + lam != 0 || cq != 0) {
      if (cq == 0) return {Rat(1), Rat(0)};
      return {a + lam, cq};
    }
    return {Rat(1), Rat(0)};
  };
  auto [p1, p2] = eig(r);
  auto [q1, q2] = eig(-r);
  Rat det = p1 * q2 - p2 * q1;
  if (det == 0) throw std::logic_error("normalize_split: dependent eigenvectors");
  p1 /= det;
  p2 /= det;  // A^{-1} = (p|q) with det 1; A = (q2 -q1; -p2 p1)
  apply_fconj(w, QuadExt(q2), QuadExt(-q1), QuadExt(-p2), QuadExt(p1),
              "diagonalize the split f-part onto D");
  QuadExt m = w.basis[idx][iD];
  if (m.is_zero()) throw std::logic_error("normalize_split: conjugation failed");
  w.scale(idx, m.inverse(), "normalize the D coefficient");
}

// elliptic type: conjugate onto Q+ = Pt + K; requires sqrt(-disc) rational;
// the conjugator may pick up a uniform sqrt factor
void normalize_elliptic(Work& w, size_t idx) {
  QuadExt disc = fdisc(w.basis[idx]);
  Rat dv = disc.rational_value();
  auto root = exact_root(-dv, 2);
  if (!root)
    throw IrrationalNormalizationError("elliptic normalization needs sqrt(" + rat_str(-dv) + ")");
  Rat r = *root;
  FMat M = fmat(w.basis[idx]);
  Rat ma = M.a.rational_value(), mb = M.b.rational_value(), mc = M.c.rational_value();
  // solve P M = T P for T = s*r*J0, J0 = (0 1; -1 0), choosing the sign s
  // that admits det P > 0 (the solution space is a Q(i)-line, so the sign of
  // det is constant per target)
  auto solve = [&](const Rat& t) -> std::optional<std::array<Rat, 4>> {
    // P = (p q; u v):  P M - T P = 0 with M=(ma mb; mc -ma), T=(0 t; -t 0)
    //  row eqs:
    //   p ma + q mc - t u          = 0
    //   p mb - q ma - t v          = 0
    //   u ma + v mc + t p          = 0
    //   u mb - v ma + t q          = 0
    // parameterize by (p, q): u = (p ma + q mc)/t, v = (p mb - q ma)/t
    for (auto [p, q] : {std::pair{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}) {
      Rat u = (p * ma + q * mc) / t, v = (p * mb - q * ma) / t;
      // verify remaining equations
      if (u * ma + v * mc + t * p != 0) continue;
      if (u * mb - v * ma + t * q != 0) continue;
      Rat det = p * v - q * u;
      if (det > 0) return std::array<Rat, 4>{p, q, u, v};
    }
    return std::nullopt;
  };
  Rat target = r;
  auto P = solve(r);
  if (!P) {
    P = solve(-r);
    target = -r;
  }
  if (!P) throw std::logic_error("normalize_elliptic: no conjugator found");
  Rat detP = (*P)[0] * (*P)[3] - (*P)[1] * (*P)[2];
  // B = P / sqrt(det P): uniform radical entries
  QuadExt scale = QuadExt::sqrt_of(detP).inverse();
  apply_fconj(w, QuadExt((*P)[0]) * scale, QuadExt((*P)[1]) * scale, QuadExt((*P)[2]) * scale,
              QuadExt((*P)[3]) * scale, "rotate the elliptic f-part onto Q+");
  // f-part is now target * Q+; scale the vector so it becomes exactly Q+
  w.scale(idx, QuadExt(Rat(1) / target), "normalize the Q+ coefficient");
}

// classification of a 1-dimensional f-line
enum class FClass { Nilpotent, Split, Elliptic };

FClass classify_fline(const QVec6& v) {
  int s = fdisc(v).sign();
  if (s > 0) return FClass::Split;
  if (s < 0) return FClass::Elliptic;
  return FClass::Nilpotent;
}

// order basis so that vectors with f-part come first; returns n_hat
size_t split_f_r(Work& w) {
  // rref sorts pivots in column order Pt,D,K,Gx,Px,I automatically
  reduce(w);
  size_t nhat = 0;
  for (const auto& v : w.basis)
    if (!v[iPt].is_zero() || !v[iD].is_zero() || !v[iK].is_zero()) ++nhat;
  return nhat;
}

Rat rat_of(const QuadExt& q, const char* what) {
  if (!q.is_rational())
    throw IrrationalNormalizationError(std::string("irrational value in ") + what);
  return q.rational_value();
}

void kill_center_coeff(Work& w, size_t i, size_t center_idx) {
  if (!w.basis[i][iI].is_zero())
    w.combine(i, -w.basis[i][iI], center_idx, "absorb the I coefficient into <I>");
}

}  // namespace

// ---- public operations --------------------------------------------------------

bool closure_check(const std::vector<AlgElement>& basis) {
  std::vector<QVec6> rows;
  rows.reserve(basis.size());
  for (const auto& b : basis) rows.push_back(to_qvec(b));
  if (rank_of(rows) != basis.size()) throw std::domain_error("closure_check: dependent basis");
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      AlgElement br = bracket(basis[i], basis[j]);
      if (!span_contains(rows, to_qvec(br))) return false;
    }
  return true;
}

SubalgebraInvariants invariants(const Subalgebra& s) {
  SubalgebraInvariants out;
  std::vector<QVec6> rows;
  for (const auto& b : s.basis) rows.push_back(to_qvec(b));
  out.n = static_cast<int>(rank_of(rows));
  // pi_f: zero out the radical components
  std::vector<QVec6> proj = rows;
  for (auto& v : proj) v[iGx] = v[iPx] = v[iI] = QuadExt();
  out.n_hat = static_cast<int>(rank_of(proj));
  out.n_check = out.n - out.n_hat;
  out.n_check_prime = span_contains(rows, qvec_basis(iI)) ? 1 : 0;
  return out;
}

std::vector<AlgElement> canonical_basis(const std::string& label,
                                        const std::map<std::string, Rat>& params) {
  auto get = [&](const char* k) {
    auto it = params.find(k);
    if (it == params.end()) throw std::domain_error("canonical_basis: missing parameter");
    return it->second;
  };
  using A = AlgElement;
  if (label == "s1.1") return {A::Pt() + A::Gx()};
  if (label == "s1.2") return {A::Pt() + get("delta") * A::I()};
  if (label == "s1.3") return {A::D() + get("mu") * A::I()};
  if (label == "s1.4") return {A::Qplus() + get("nu") * A::I()};
  if (label == "s1.5") return {A::Px()};
  if (label == "s1.6") return {A::I()};
  if (label == "s2.1") return {A::Pt(), A::D() + get("nu") * A::I()};
  if (label == "s2.2") return {A::Pt() + A::Gx(), A::I()};
  if (label == "s2.3") return {A::Pt() + get("delta") * A::I(), A::Px()};
  if (label == "s2.4") return {A::Pt(), A::I()};
  if (label == "s2.5") return {A::D() + get("nu") * A::I(), A::Px()};
  if (label == "s2.6") return {A::D(), A::I()};
  if (label == "s2.7") return {A::Qplus(), A::I()};
  if (label == "s2.8") return {A::Px(), A::I()};
  if (label == "s3.1") return {A::Pt(), A::D(), A::K()};
  if (label == "s3.2") return {A::Pt(), A::D() + get("nu") * A::I(), A::Px()};
  if (label == "s3.3") return {A::Pt(), A::D(), A::I()};
  if (label == "s3.4") return {A::Pt() + A::Gx(), A::Px(), A::I()};
  if (label == "s3.5") return {A::Pt(), A::Px(), A::I()};
  if (label == "s3.6") return {A::D(), A::Px(), A::I()};
  if (label == "s3.7") return {A::Gx(), A::Px(), A::I()};
  if (label == "s4.1") return {A::Pt(), A::D(), A::K(), A::I()};
  if (label == "s4.2") return {A::Pt(), A::D(), A::Px(), A::I()};
  if (label == "s4.3") return {A::Pt(), A::Gx(), A::Px(), A::I()};
  if (label == "s4.4") return {A::D(), A::Gx(), A::Px(), A::I()};
  if (label == "s4.5") return {A::Qplus(), A::Gx(), A::Px(), A::I()};
  if (label == "s5.1") return {A::Pt(), A::D(), A::Gx(), A::Px(), A::I()};
  throw std::domain_error("canonical_basis: unknown label " + label);
}

std::vector<std::string> canonical_labels() {
  return {"s1.1", "s1.2", "s1.3", "s1.4", "s1.5", "s1.6", "s2.1", "s2.2", "s2.3",
          "s2.4", "s2.5", "s2.6", "s2.7", "s2.8", "s3.1", "s3.2", "s3.3", "s3.4",
          "s3.5", "s3.6", "s3.7", "s4.1", "s4.2", "s4.3", "s4.4", "s4.5", "s5.1"};
}

namespace {

struct CaseResult {
  std::string label;
  std::map<std::string, Rat> params;
};

// ---- pi_f s = 0 ----------------------------------------------------------------

CaseResult case_radical(Work& w) {
  size_t n = w.basis.size();
  // rref ordered the basis by pivots (Gx before Px before I)
  if (n == 3) return {"s3.7", {}};
  if (n == 2) {
    // must be <Px, I>: kill the Gx component of the leading vector by a
    // rotation if present (cannot happen for a closed 2D subalgebra without
    // I, and with I present the leading vector has a (Gx,Px) part)
    QVec6& v = w.basis[0];
    if (!span_contains(w.basis, qvec_basis(iI)))
      throw std::logic_error("case_radical: 2D subalgebra of r without I is not closed");
    if (!v[iGx].is_zero()) {
      Rat g = rat_of(v[iGx], "rotation"), p = rat_of(v[iPx], "rotation");
      Rat n2 = g * g + p * p;
      QuadExt len = QuadExt::sqrt_of(n2);
      QuadExt c = QuadExt(p) / len, s = QuadExt(-g) / len;
      w.move(Move{Move::Rot, c, s, ScalarExt()}, "rotate (Gx,Px) part onto Px");
    }
    reduce(w);
    QVec6& v0 = w.basis[0];
    if (!v0[iPx].is_zero()) w.scale(0, v0[iPx].inverse(), "normalize Px coefficient");
    kill_center_coeff(w, 0, 1);
    return {"s2.8", {}};
  }
  // n = 1
  QVec6& v = w.basis[0];
  if (v[iGx].is_zero() && v[iPx].is_zero()) {
    w.scale(0, v[iI].inverse(), "normalize I coefficient");
    return {"s1.6", {}};
  }
  if (!v[iGx].is_zero()) {
    Rat g = rat_of(v[iGx], "rotation"), p = rat_of(v[iPx], "rotation");
    Rat n2 = g * g + p * p;
    QuadExt len = QuadExt::sqrt_of(n2);
    QuadExt c = QuadExt(p) / len, s = QuadExt(-g) / len;
    w.move(Move{Move::Rot, c, s, ScalarExt()}, "rotate (Gx,Px) part onto Px");
  }
  w.scale(0, w.basis[0][iPx].inverse(), "normalize Px coefficient");
  QuadExt c1 = w.basis[0][iI];
  if (!c1.is_zero())
    w.move(Move{Move::Gx, QuadExt(Rat(2)) * c1, QuadExt(), ScalarExt()},
           "remove the I coefficient of Px");
  return {"s1.5", {}};
}

// ---- pi_f s = <Pt> --------------------------------------------------------------

CaseResult case_pt(Work& w) {
  size_t n = w.basis.size();
  QVec6& q1 = w.basis[0];
  // kill the Px coefficient: Gx(e)_* Pt = Pt + e Px - e^2/4 I
  if (!q1[iPx].is_zero())
    w.move(Move{Move::Gx, -q1[iPx], QuadExt(), ScalarExt()}, "remove the Px coefficient");
  bool has_I = span_contains(w.basis, qvec_basis(iI));
  QuadExt b1 = w.basis[0][iGx];
  if (!b1.is_zero()) {
    if (b1.sign() < 0) {
      w.move(Move{Move::Rot, QuadExt(Rat(-1)), QuadExt(Rat(0)), ScalarExt()},
             "flip the Gx coefficient sign with J");
      b1 = w.basis[0][iGx];
    }
    Rat b = rat_of(b1, "Gx normalization");
    auto q = exact_root(b, 3);
    if (!q) throw IrrationalNormalizationError("cube root of " + rat_str(b) + " is irrational");
    if (*q != 1) w.move(Move{Move::D, QuadExt(*q), QuadExt(), ScalarExt()}, "scale Gx to 1");
    w.scale(0, w.basis[0][iPt].inverse(), "renormalize the Pt coefficient");
    // remove the I coefficient
    if (has_I) {
      reduce(w);
      // locate <I> row
      for (size_t i = 1; i < w.basis.size(); ++i)
        if (w.basis[i][iGx].is_zero() && w.basis[i][iPx].is_zero() && !w.basis[i][iI].is_zero()) {
          w.scale(i, w.basis[i][iI].inverse(), "normalize I");
          kill_center_coeff(w, 0, i);
        }
    } else if (!w.basis[0][iI].is_zero()) {
      w.move(Move{Move::Px, QuadExt(Rat(-2)) * w.basis[0][iI], QuadExt(), ScalarExt()},
             "remove the I coefficient of Pt+Gx");
    }
    if (n == 1) return {"s1.1", {}};
    if (n == 2) return {"s2.2", {}};
    reduce(w);
    return {"s3.4", {}};
  }
  // b1 == 0
  if (has_I) {
    reduce(w);
    for (size_t i = 1; i < w.basis.size(); ++i)
      if (!w.basis[i][iI].is_zero() && w.basis[i][iGx].is_zero() && w.basis[i][iPx].is_zero())
        kill_center_coeff(w, 0, i);
    if (n == 2) return {"s2.4", {}};
    reduce(w);
    return {"s3.5", {}};
  }
  if (n == 2) {
    // I not in s: the second vector must be Px + c I
    reduce(w);
    QVec6& q2 = w.basis[1];
    if (!q2[iGx].is_zero()) throw std::logic_error("case_pt: unexpected Gx part in s cap r");
    w.scale(1, q2[iPx].inverse(), "normalize the Px coefficient");
    QuadExt c2 = w.basis[1][iI];
    if (!c2.is_zero()) {
      w.move(Move{Move::Gx, QuadExt(Rat(2)) * c2, QuadExt(), ScalarExt()},
             "remove the I coefficient of Px");
      // re-establish the gauge on vector 1
      QVec6& v1 = w.basis[0];
      if (!v1[iPx].is_zero()) w.combine(0, -v1[iPx], 1, "re-gauge the Px coefficient");
    }
    QuadExt c1 = w.basis[0][iI];
    Rat delta(0);
    if (!c1.is_zero()) {
      Rat c = rat_of(c1, "delta normalization");
      QuadExt q = QuadExt::sqrt_of(rat_abs(c));
      w.move(Move{Move::D, q, QuadExt(), ScalarExt()}, "scale |c1| to 1");
      w.scale(0, w.basis[0][iPt].inverse(), "renormalize the Pt coefficient");
      w.scale(1, w.basis[1][iPx].inverse(), "renormalize the Px coefficient");
      delta = Rat(sgn(c));
    }
    return {"s2.3", {{"delta", delta}}};
  }
  // n == 1, Q1 = Pt + c1 I
  QuadExt c1 = w.basis[0][iI];
  Rat delta(0);
  if (!c1.is_zero()) {
    Rat c = rat_of(c1, "delta normalization");
    QuadExt q = QuadExt::sqrt_of(rat_abs(c));
    w.move(Move{Move::D, q, QuadExt(), ScalarExt()}, "scale |c1| to 1");
    w.scale(0, w.basis[0][iPt].inverse(), "renormalize the Pt coefficient");
    delta = Rat(sgn(c));
  }
  return {"s1.2", {{"delta", delta}}};
}

// ---- pi_f s = <D> ---------------------------------------------------------------

CaseResult case_d(Work& w) {
  size_t n = w.basis.size();
  // Px(a1) kills the Px coefficient (Px(e)_* D = D - e Px), then Gx(-b1)
  QuadExt a1 = w.basis[0][iPx];
  if (!a1.is_zero()) w.move(Move{Move::Px, a1, QuadExt(), ScalarExt()}, "remove the Px coefficient");
  QuadExt b1 = w.basis[0][iGx];
  if (!b1.is_zero())
    w.move(Move{Move::Gx, -b1, QuadExt(), ScalarExt()}, "remove the Gx coefficient");
  bool has_I = span_contains(w.basis, qvec_basis(iI));
  if (n == 1) {
    QuadExt c1 = w.basis[0][iI];
    Rat mu = c1.is_zero() ? Rat(0) : rat_of(c1, "mu");
    if (mu < 0) {
      w.move(Move{Move::Rot, QuadExt(Rat(0)), QuadExt(Rat(-1)), ScalarExt()},
             "map D - mu I to -D - mu I with K'");
      w.scale(0, QuadExt(Rat(-1)), "flip the sign");
      mu = -mu;
    }
    return {"s1.3", {{"mu", mu}}};
  }
  reduce(w);
  // identify the r-part vectors
  if (has_I) {
    // kill I coefficients everywhere via the <I> row
    size_t iidx = w.basis.size();
    for (size_t i = 0; i < w.basis.size(); ++i)
      if (w.basis[i][iGx].is_zero() && w.basis[i][iPx].is_zero() && w.basis[i][iD].is_zero() &&
          !w.basis[i][iI].is_zero())
        iidx = i;
    if (iidx == w.basis.size()) throw std::logic_error("case_d: missing <I> row");
    w.scale(iidx, w.basis[iidx][iI].inverse(), "normalize I");
    for (size_t i = 0; i < w.basis.size(); ++i)
      if (i != iidx) kill_center_coeff(w, i, iidx);
    if (n == 2) return {"s2.6", {}};
    // n == 3: remaining r-vector is Gx or Px type
    size_t vidx = w.basis.size();
    for (size_t i = 0; i < w.basis.size(); ++i)
      if (i != iidx && w.basis[i][iD].is_zero()) vidx = i;
    if (vidx == w.basis.size()) throw std::logic_error("case_d: missing r row");
    if (!w.basis[vidx][iGx].is_zero()) {
      w.move(Move{Move::Rot, QuadExt(Rat(0)), QuadExt(Rat(-1)), ScalarExt()},
             "map the Gx case to the Px case with K'");
      for (size_t i = 0; i < w.basis.size(); ++i)
        if (!w.basis[i][iD].is_zero()) {
          if (w.basis[i][iD].sign() < 0) w.scale(i, QuadExt(Rat(-1)), "restore the D sign");
        }
      reduce(w);
      // K' may have reintroduced I coefficients: absorb again
      for (size_t i = 0; i < w.basis.size(); ++i)
        if (i != iidx) kill_center_coeff(w, i, iidx);
    }
    reduce(w);
    return {"s3.6", {}};
  }
  // no I: n == 2 with Q2 of pure Gx or Px type, c2 forced to vanish
  QVec6& q2 = w.basis[1];
  Rat nu(0);
  bool gx_case = !q2[iGx].is_zero();
  if (gx_case) {
    w.move(Move{Move::Rot, QuadExt(Rat(0)), QuadExt(Rat(-1)), ScalarExt()},
           "map the Gx case to the Px case with K'");
    if (w.basis[0][iD].sign() < 0) w.scale(0, QuadExt(Rat(-1)), "restore the D sign");
  }
  reduce(w);
  if (!w.basis[1][iI].is_zero())
    throw std::logic_error("case_d: closure should force c2 = 0");
  w.scale(1, w.basis[1][iPx].inverse(), "normalize the Px coefficient");
  nu = rat_of(w.basis[0][iI], "nu");
  return {"s2.5", {{"nu", nu}}};
}

// ---- pi_f s = <Q+> --------------------------------------------------------------

CaseResult case_qplus(Work& w) {
  size_t n = w.basis.size();
  // Px(b1) removes the Gx coefficient (Px(e)_* K = K - e Gx - ...), then
  // Gx(-a1') removes the Px coefficient (Gx(e)_* Pt = Pt + e Px - ...)
  QuadExt b1 = w.basis[0][iGx];
  if (!b1.is_zero()) w.move(Move{Move::Px, b1, QuadExt(), ScalarExt()}, "remove the Gx coefficient");
  QuadExt a1 = w.basis[0][iPx];
  if (!a1.is_zero())
    w.move(Move{Move::Gx, -a1, QuadExt(), ScalarExt()}, "remove the Px coefficient");
  if (n == 1) {
    Rat nu = w.basis[0][iI].is_zero() ? Rat(0) : rat_of(w.basis[0][iI], "nu");
    return {"s1.4", {{"nu", nu}}};
  }
  reduce(w);
  // n == 2 with I in s
  for (size_t i = 0; i < w.basis.size(); ++i) {
    bool pure_I = w.basis[i][iPt].is_zero() && w.basis[i][iK].is_zero() &&
                  w.basis[i][iGx].is_zero() && w.basis[i][iPx].is_zero() &&
                  !w.basis[i][iI].is_zero();
    if (pure_I) {
      w.scale(i, w.basis[i][iI].inverse(), "normalize I");
      for (size_t j = 0; j < w.basis.size(); ++j)
        if (j != i) kill_center_coeff(w, j, i);
      return {"s2.7", {}};
    }
  }
  throw std::logic_error("case_qplus: expected I in the subalgebra");
}

// ---- pi_f s = <Pt, D> (Borel) ----------------------------------------------------

CaseResult case_borel(Work& w) {
  size_t n = w.basis.size();
  reduce(w);
  // after rref the first two rows carry the f-parts; bring them to Pt and D
  // exactly: basis[0] has pivot Pt (possibly with D/K admixture), basis[1] has
  // pivot D (with K admixture impossible: pi_f s = <Pt, D> was arranged by the
  // caller's conjugation)
  if (!w.basis[0][iK].is_zero() || !w.basis[1][iK].is_zero())
    throw std::logic_error("case_borel: K component should be absent");
  if (!w.basis[1][iD].is_zero()) w.scale(1, w.basis[1][iD].inverse(), "normalize D");
  if (!w.basis[0][iD].is_zero()) w.combine(0, -w.basis[0][iD], 1, "clear D from vector 1");
  w.scale(0, w.basis[0][iPt].inverse(), "normalize Pt");
  // clean Q2 = D + ... as in the <D> case
  QuadExt a2 = w.basis[1][iPx];
  if (!a2.is_zero()) w.move(Move{Move::Px, a2, QuadExt(), ScalarExt()}, "remove Px from D");
  QuadExt b2 = w.basis[1][iGx];
  if (!b2.is_zero()) w.move(Move{Move::Gx, -b2, QuadExt(), ScalarExt()}, "remove Gx from D");
  reduce(w);
  bool has_I = span_contains(w.basis, qvec_basis(iI));
  if (n == 2) {
    // closure forces the Pt row clean
    if (!w.basis[0][iGx].is_zero() || !w.basis[0][iPx].is_zero() || !w.basis[0][iI].is_zero())
      throw std::logic_error("case_borel: closure should clean the Pt row");
    Rat nu = w.basis[1][iI].is_zero() ? Rat(0) : rat_of(w.basis[1][iI], "nu");
    return {"s2.1", {{"nu", nu}}};
  }
  if (has_I) {
    size_t iidx = w.basis.size();
    for (size_t i = 0; i < w.basis.size(); ++i)
      if (w.basis[i][iPt].is_zero() && w.basis[i][iD].is_zero() && w.basis[i][iGx].is_zero() &&
          w.basis[i][iPx].is_zero() && !w.basis[i][iI].is_zero())
        iidx = i;
    if (iidx == w.basis.size()) throw std::logic_error("case_borel: missing <I> row");
    w.scale(iidx, w.basis[iidx][iI].inverse(), "normalize I");
    for (size_t i = 0; i < w.basis.size(); ++i)
      if (i != iidx) kill_center_coeff(w, i, iidx);
    reduce(w);
    if (n == 3) return {"s3.3", {}};
    return {"s4.2", {}};
  }
  // n == 3 without I: third vector is Px type with c3 = 0 forced
  reduce(w);
  QVec6& q3 = w.basis[2];
  if (!q3[iGx].is_zero()) throw std::logic_error("case_borel: b3 should vanish");
  if (!q3[iI].is_zero()) throw std::logic_error("case_borel: c3 should vanish");
  w.scale(2, q3[iPx].inverse(), "normalize the Px coefficient");
  if (!w.basis[0][iPx].is_zero()) w.combine(0, -w.basis[0][iPx], 2, "clear Px from the Pt row");
  if (!w.basis[1][iPx].is_zero()) w.combine(1, -w.basis[1][iPx], 2, "clear Px from the D row");
  if (!w.basis[0][iGx].is_zero() || !w.basis[0][iI].is_zero())
    throw std::logic_error("case_borel: closure should clean the Pt row");
  Rat nu = w.basis[1][iI].is_zero() ? Rat(0) : rat_of(w.basis[1][iI], "nu");
  return {"s3.2", {{"nu", nu}}};
}

// ---- pi_f s = f -------------------------------------------------------------------

CaseResult case_levi(Work& w) {
  size_t n = w.basis.size();
  reduce(w);
  // rows 0..2 have f-parts spanning f: bring them to Pt, D, K exactly by
  // row operations (rref over the f columns already did this)
  // Levi-Malcev: Gx(e1) then Px(e2) with e1 = -p1, e2 = g3
  QuadExt e1 = -w.basis[0][iPx];
  QuadExt e2 = w.basis[2][iGx];
  if (!e2.is_zero()) w.move(Move{Move::Px, e2, QuadExt(), ScalarExt()}, "Levi-Malcev Px move");
  if (!e1.is_zero()) w.move(Move{Move::Gx, e1, QuadExt(), ScalarExt()}, "Levi-Malcev Gx move");
  reduce(w);
  for (size_t i = 0; i < 3; ++i)
    if (!w.basis[i][iGx].is_zero() || !w.basis[i][iPx].is_zero())
      throw std::logic_error("case_levi: rho_1 components should vanish");
  if (n == 3) {
    for (size_t i = 0; i < 3; ++i)
      if (!w.basis[i][iI].is_zero())
        throw std::logic_error("case_levi: closure should clean the I components");
    return {"s3.1", {}};
  }
  // n == 4 with I
  size_t iidx = 3;
  w.scale(iidx, w.basis[iidx][iI].inverse(), "normalize I");
  for (size_t i = 0; i < 3; ++i) kill_center_coeff(w, i, iidx);
  return {"s4.1", {}};
}

// ---- n_check == 3: r contained in s ------------------------------------------------

CaseResult case_contains_r(Work& w, int n_hat) {
  // after rref the r rows have pivots Gx, Px, I, which clears all radical
  // admixture from the f rows
  reduce(w);
  if (n_hat == 0) return {"s3.7", {}};
  if (n_hat == 1) {
    switch (classify_fline(w.basis[0])) {
      case FClass::Nilpotent:
        normalize_nilpotent(w, 0);
        reduce(w);
        return {"s4.3", {}};
      case FClass::Split:
        normalize_split(w, 0);
        reduce(w);
        return {"s4.4", {}};
      case FClass::Elliptic: {
        normalize_elliptic(w, 0);
        // recombine: f-part is exactly Q+ = Pt + K; clear its radical part
        reduce(w);
        return {"s4.5", {}};
      }
    }
  }
  // n_hat == 2: Borel; find the nilpotent line in span of the two f-parts
  // (handled by conjugating it to Pt; the span then reduces to <Pt, D>)
  // quadratic q(x v1 + y v2) has a double root (the Borel's nilradical)
  {
    const QVec6 &v1 = w.basis[0], &v2 = w.basis[1];
    QuadExt A = fdisc(v1);
    QuadExt C = fdisc(v2);
    // bilinear form: disc(v+w) = disc v + disc w + 2 B(v,w)
    QVec6 sum{};
    for (size_t c = 0; c < 6; ++c) sum[c] = v1[c] + v2[c];
    QuadExt B = (fdisc(sum) - A - C) * QuadExt(Rat(1, 2));
    // double root of A x^2 + 2 B x y + C y^2
    Rat x, y;
    if (!A.is_zero()) {
      x = rat_of(-B / A, "Borel nilline");
      y = 1;
    } else {
      x = 1;
      y = 0;
    }
    // nilpotent combo: x v1 + y v2 placed first
    QVec6 nil{};
    for (size_t c = 0; c < 6; ++c) nil[c] = QuadExt(x) * v1[c] + QuadExt(y) * v2[c];
    w.basis[0] = nil;
    w.steps.push_back("replace vector 1 by the nilpotent combination");
    normalize_nilpotent(w, 0);
    reduce(w);
    return {"s5.1", {}};
  }
}

}  // namespace

CanonicalForm canonicalize(const Subalgebra& s) {
  if (s.basis.empty()) throw std::domain_error("canonicalize: empty basis");
  if (!closure_check(s.basis)) throw NotClosedError("canonicalize: basis is not closed");
  SubalgebraInvariants inv = invariants(s);
  if (inv.n >= 6) throw FullAlgebraError("canonicalize: the full algebra g^ess is not proper");

  Work w;
  for (const auto& b : s.basis) w.basis.push_back(to_qvec(b));
  reduce(w);

  CaseResult res;
  if (inv.n_check == 3) {
    res = case_contains_r(w, inv.n_hat);
  } else if (inv.n_hat == 0) {
    res = case_radical(w);
  } else if (inv.n_hat == 1) {
    // conjugate the f-line to its canonical direction, then dispatch
    switch (classify_fline(w.basis[0])) {
      case FClass::Nilpotent:
        normalize_nilpotent(w, 0);
        res = case_pt(w);
        break;
      case FClass::Split:
        normalize_split(w, 0);
        res = case_d(w);
        break;
      case FClass::Elliptic:
        normalize_elliptic(w, 0);
        res = case_qplus(w);
        break;
    }
  } else if (inv.n_hat == 2) {
    // Borel: align the nilpotent line of pi_f s with Pt first
    reduce(w);
    const QVec6 &v1 = w.basis[0], &v2 = w.basis[1];
    QuadExt A = fdisc(v1), C = fdisc(v2);
    QVec6 sum{};
    for (size_t c = 0; c < 6; ++c) sum[c] = v1[c] + v2[c];
    QuadExt B = (fdisc(sum) - A - C) * QuadExt(Rat(1, 2));
    Rat x, y;
    if (!A.is_zero()) {
      x = rat_of(-B / A, "Borel nilline");
      y = 1;
    } else {
      x = 1;
      y = 0;
    }
    QVec6 nil{};
    for (size_t c = 0; c < 6; ++c) nil[c] = QuadExt(x) * v1[c] + QuadExt(y) * v2[c];
    if (qvec_is_zero(nil)) throw std::logic_error("canonicalize: degenerate Borel");
    w.basis[0] = nil;
    w.steps.push_back("replace vector 1 by the nilpotent combination");
    normalize_nilpotent(w, 0);
    res = case_borel(w);
  } else {
    res = case_levi(w);
  }

  CanonicalForm form;
  form.label = res.label;
  form.params = res.params;
  form.steps = w.steps;
  form.witness = w.witness();

  // enforced postcondition: independently recompute the pushforward of the
  // original basis by the witness and compare spans with the canonical basis
  std::vector<QVec6> image;
  for (const auto& b : s.basis) image.push_back(pushforward_q(form.witness, to_qvec(b)));
  std::vector<QVec6> target;
  for (const auto& b : canonical_basis(form.label, form.params)) target.push_back(to_qvec(b));
  if (!spans_equal(image, target))
    throw std::logic_error("canonicalize: witness verification failed for " + form.label);
  return form;
}

bool equivalent(const Subalgebra& a, const Subalgebra& b) {
  CanonicalForm ca = canonicalize(a), cb = canonicalize(b);
  return ca.label == cb.label && ca.params == cb.params;
}

Classify1DResult classify_1d_full(const AlgElement& qhat, const SolutionSum& f) {
  Classify1DResult out{};
  if (qhat.is_zero()) {
    if (f.is_zero()) throw std::domain_error("classify_1d_full: zero input");
    out.kind = Classify1DResult::LinCase;
    return out;
  }
  bool central_only = true;
  for (int i = 0; i < 6; ++i)
    if (i != iI && qhat[static_cast<size_t>(i)] != 0) central_only = false;
  if (central_only) {
    out.kind = Classify1DResult::CenterCase;
    // rescale Q to I + Z(f/c), then conjugate by Z(-f/c)
    Rat c = qhat[iI];
    out.center_shift = -(f.scaled(ScalarExt(Rat(1) / c)));
    return out;
  }
  out.kind = Classify1DResult::EssentialCase;
  out.essential = canonicalize(Subalgebra{{qhat}});
  return out;
}

}  // namespace heatsym
