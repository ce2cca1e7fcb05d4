#pragma once

#include <array>
#include <string>
#include <vector>

#include "heatsym/quad_ext.hpp"
#include "heatsym/rat.hpp"

namespace heatsym {

// Basis order of the essential algebra: (Pt, D, K, Gx, Px, I).
enum BasisIndex : int { iPt = 0, iD = 1, iK = 2, iGx = 3, iPx = 4, iI = 5 };

inline const char* basis_name(int i) {
  static const char* names[6] = {"Pt", "D", "K", "Gx", "Px", "I"};
  return names[i];
}

// Coefficient vector over Q in the (Pt, D, K, Gx, Px, I) basis.
struct AlgElement {
  std::array<Rat, 6> c{};

  AlgElement() = default;
  explicit AlgElement(std::array<Rat, 6> v) : c(std::move(v)) {}
  static AlgElement basis(int i) {
    AlgElement e;
    e.c[static_cast<size_t>(i)] = 1;
    return e;
  }
  static AlgElement Pt() { return basis(iPt); }
  static AlgElement D() { return basis(iD); }
  static AlgElement K() { return basis(iK); }
  static AlgElement Gx() { return basis(iGx); }
  static AlgElement Px() { return basis(iPx); }
  static AlgElement I() { return basis(iI); }
  static AlgElement Qplus() { return Pt() + K(); }
  static AlgElement Qminus() { return Pt() - K(); }

  Rat& operator[](size_t i) { return c[i]; }
  const Rat& operator[](size_t i) const { return c[i]; }

  bool is_zero() const {
    for (const auto& v : c)
      if (v != 0) return false;
    return true;
  }
  AlgElement operator+(const AlgElement& o) const;
  AlgElement operator-(const AlgElement& o) const;
  AlgElement operator-() const;
  AlgElement scaled(const Rat& k) const;
  friend AlgElement operator*(const Rat& k, const AlgElement& x) { return x.scaled(k); }
  bool operator==(const AlgElement& o) const { return c == o.c; }

  std::string str() const;
};

using Mat6 = std::array<std::array<Rat, 6>, 6>;

AlgElement bracket(const AlgElement& X, const AlgElement& Y);

// Matrix of ad(X) = [X, .]; column j is bracket(X, basis_j).
Mat6 ad_matrix(const AlgElement& X);

AlgElement mat6_apply(const Mat6& M, const AlgElement& v);
Mat6 mat6_mul(const Mat6& A, const Mat6& B);

// Structural facts of Section-2 type, each verified from the structure
// constants: Jacobi on all triples, radical ideal property, derived algebra
// of the radical, sl(2) relations of the Levi factor, and the rho_1 + rho_0
// form of the action of f on r.
struct StructureReport {
  bool all_ok = true;
  std::vector<std::pair<std::string, bool>> checks;
  void add(const std::string& name, bool ok) {
    checks.emplace_back(name, ok);
    all_ok = all_ok && ok;
  }
};

StructureReport structure_predicates();

// --- vectors over Q(sqrt(d)), used by pushforwards and the classifier ---

using QVec6 = std::array<QuadExt, 6>;
using QMat6 = std::array<std::array<QuadExt, 6>, 6>;

QVec6 to_qvec(const AlgElement& x);
QVec6 qmat_apply(const QMat6& M, const QVec6& v);
QMat6 qmat_mul(const QMat6& A, const QMat6& B);
QMat6 qmat_identity();

}  // namespace heatsym
