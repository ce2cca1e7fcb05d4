#include "heatsym/liealg.hpp"

#include <sstream>

namespace heatsym {

AlgElement AlgElement::operator+(const AlgElement& o) const {
  AlgElement r;
  for (size_t i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
  AlgElement r;
  for (size_t i = 0; i < 6; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

AlgElement AlgElement::operator-() const {
  AlgElement r;
  for (size_t i = 0; i < 6; ++i) r.c[i] = -c[i];
  return r;
}

AlgElement AlgElement::scaled(const Rat& k) const {
  AlgElement r;
  for (size_t i = 0; i < 6; ++i) r.c[i] = c[i] * k;
  return r;
}

std::string AlgElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 6; ++i) {
    const Rat& v = c[static_cast<size_t>(i)];
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    Rat a = first ? v : rat_abs(v);
    if (first && a < 0) {
      os << "-";
      a = -a;
    }
    if (a != 1) os << rat_str(a) << "*";
    os << basis_name(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// bracket table: bk[i][j] = [basis_i, basis_j]
const std::array<std::array<AlgElement, 6>, 6>& bracket_table() {
  static const auto table = [] {
    std::array<std::array<AlgElement, 6>, 6> t{};
    auto set = [&](int i, int j, const AlgElement& v) {
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      t[static_cast<size_t>(j)][static_cast<size_t>(i)] = -v;
    };
    set(iD, iPt, AlgElement::Pt().scaled(Rat(-2)));
    set(iD, iK, AlgElement::K().scaled(Rat(2)));
    set(iPt, iK, AlgElement::D());
    set(iPt, iGx, AlgElement::Px());
    set(iD, iGx, AlgElement::Gx());
    set(iD, iPx, AlgElement::Px().scaled(Rat(-1)));
    set(iK, iPx, AlgElement::Gx().scaled(Rat(-1)));
    set(iGx, iPx, AlgElement::I().scaled(Rat(1, 2)));
    return t;
  }();
  return table;
}

}  // namespace

AlgElement bracket(const AlgElement& X, const AlgElement& Y) {
  AlgElement out;
  const auto& tab = bracket_table();
  for (size_t i = 0; i < 6; ++i) {
    if (X[i] == 0) continue;
    for (size_t j = 0; j < 6; ++j) {
      if (Y[j] == 0) continue;
      out = out + tab[i][j].scaled(X[i] * Y[j]);
    }
  }
  return out;
}

Mat6 ad_matrix(const AlgElement& X) {
  Mat6 M{};
  for (size_t j = 0; j < 6; ++j) {
    AlgElement col = bracket(X, AlgElement::basis(static_cast<int>(j)));
    for (size_t i = 0; i < 6; ++i) M[i][j] = col[i];
  }
  return M;
}

AlgElement mat6_apply(const Mat6& M, const AlgElement& v) {
  AlgElement out;
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) out[i] += M[i][j] * v[j];
  return out;
}

Mat6 mat6_mul(const Mat6& A, const Mat6& B) {
  Mat6 C{};
  for (size_t i = 0; i < 6; ++i)
    for (size_t k = 0; k < 6; ++k) {
      if (A[i][k] == 0) continue;
      for (size_t j = 0; j < 6; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

StructureReport structure_predicates() {
  StructureReport rep;

  // Jacobi identity on all basis triples
  bool jacobi = true;
  for (int i = 0; i < 6 && jacobi; ++i)
    for (int j = 0; j < 6 && jacobi; ++j)
      for (int k = 0; k < 6; ++k) {
        AlgElement a = AlgElement::basis(i), b = AlgElement::basis(j), c = AlgElement::basis(k);
        AlgElement s = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                       bracket(c, bracket(a, b));
        if (!s.is_zero()) {
          jacobi = false;
          break;
        }
      }
  rep.add("jacobi identity on all basis triples", jacobi);

  auto in_span = [](const AlgElement& v, std::initializer_list<int> idx) {
    for (int i = 0; i < 6; ++i) {
      bool allowed = false;
      for (int j : idx) allowed = allowed || (i == j);
      if (!allowed && v[static_cast<size_t>(i)] != 0) return false;
    }
    return true;
  };

  // r = <Gx, Px, I> is an ideal: [g, r] in r
  bool ideal = true;
  for (int i = 0; i < 6; ++i)
    for (int j : {iGx, iPx, iI})
      ideal = ideal && in_span(bracket(AlgElement::basis(i), AlgElement::basis(j)), {iGx, iPx, iI});
  rep.add("radical <Gx,Px,I> is an ideal", ideal);

  // [f, r] in r for the Levi complement f = <Pt, D, K>
  bool fr = true;
  for (int i : {iPt, iD, iK})
    for (int j : {iGx, iPx, iI})
      fr = fr && in_span(bracket(AlgElement::basis(i), AlgElement::basis(j)), {iGx, iPx, iI});
  rep.add("[f, r] contained in r", fr);

  // r' = [r, r] = <I>
  bool rprime = true;
  {
    bool found_I = false;
    for (int i : {iGx, iPx, iI})
      for (int j : {iGx, iPx, iI}) {
        AlgElement b = bracket(AlgElement::basis(i), AlgElement::basis(j));
        rprime = rprime && in_span(b, {iI});
        if (!b.is_zero()) found_I = true;
      }
    rprime = rprime && found_I;
  }
  rep.add("[r, r] = <I>", rprime);

  // I spans the center
  bool central = true;
  for (int i = 0; i < 6; ++i)
    central = central && bracket(AlgElement::I(), AlgElement::basis(i)).is_zero();
  rep.add("I is central", central);

  // f closes to sl(2): [D,Pt]=-2Pt, [D,K]=2K, [Pt,K]=D
  bool sl2 = bracket(AlgElement::D(), AlgElement::Pt()) == AlgElement::Pt().scaled(Rat(-2)) &&
             bracket(AlgElement::D(), AlgElement::K()) == AlgElement::K().scaled(Rat(2)) &&
             bracket(AlgElement::Pt(), AlgElement::K()) == AlgElement::D();
  rep.add("Levi factor satisfies the sl(2,R) relations", sl2);

  // action of f on (Gx, Px, I) equals rho_1 + rho_0 with
  // rho_n(Pt)_{ij} = (n-j) delta_{i,j+1}, rho_n(D)_{ij} = (n-2j) delta_{ij},
  // rho_n(-K)_{ij} = j delta_{i+1,j}
  {
    auto rho = [](int n, int which, int i, int j) -> Rat {  // which: 0=Pt,1=D,2=-K
      if (which == 0) return (i == j + 1) ? Rat(n - j) : Rat(0);
      if (which == 1) return (i == j) ? Rat(n - 2 * j) : Rat(0);
      return (i + 1 == j) ? Rat(j) : Rat(0);
    };
    bool match = true;
    const int rbasis[2] = {iGx, iPx};  // rho_1 on (Gx, Px) as coordinates 0,1
    const AlgElement gens[3] = {AlgElement::Pt(), AlgElement::D(), AlgElement::K().scaled(Rat(-1))};
    for (int w = 0; w < 3; ++w) {
      for (int j = 0; j < 2; ++j) {
        AlgElement img = bracket(gens[w], AlgElement::basis(rbasis[j]));
        for (int i = 0; i < 2; ++i) {
          Rat expect = rho(1, w, i, j);
          match = match && (img[static_cast<size_t>(rbasis[i])] == expect);
        }
        match = match && (img[iI] == 0) && (img[iPt] == 0) && (img[iD] == 0) && (img[iK] == 0);
      }
      // rho_0 on I: everything acts as zero
      match = match && bracket(gens[w], AlgElement::I()).is_zero();
    }
    rep.add("f-action on (Gx,Px,I) is rho_1 + rho_0", match);
  }

  return rep;
}

QVec6 to_qvec(const AlgElement& x) {
  QVec6 v;
  for (size_t i = 0; i < 6; ++i) v[i] = QuadExt(x[i]);
  return v;
}

QVec6 qmat_apply(const QMat6& M, const QVec6& v) {
  QVec6 out;
  for (size_t i = 0; i < 6; ++i) {
    QuadExt acc;
    for (size_t j = 0; j < 6; ++j) {
      if (M[i][j].is_zero() || v[j].is_zero()) continue;
      acc += M[i][j] * v[j];
    }
    out[i] = acc;
  }
  return out;
}

QMat6 qmat_mul(const QMat6& A, const QMat6& B) {
  QMat6 C{};
  for (size_t i = 0; i < 6; ++i)
    for (size_t k = 0; k < 6; ++k) {
      if (A[i][k].is_zero()) continue;
      for (size_t j = 0; j < 6; ++j) {
        if (B[k][j].is_zero()) continue;
        C[i][j] += A[i][k] * B[k][j];
      }
    }
  return C;
}

QMat6 qmat_identity() {
  QMat6 M{};
  for (size_t i = 0; i < 6; ++i) M[i][i] = QuadExt(Rat(1));
  return M;
}

}  // namespace heatsym
