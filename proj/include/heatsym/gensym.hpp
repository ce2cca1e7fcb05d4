#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heatsym/heatexpr.hpp"
#include "heatsym/liealg.hpp"

namespace heatsym {

// Linear generalized symmetry operator sum c_{kl} G^k Dx^l in normal order
// (all G factors to the left of all Dx factors), with the reordering relation
// Dx G = G Dx + 1/2. Here G = t Dx + x/2.
class GenSymOp {
 public:
  GenSymOp() = default;
  static GenSymOp term(int k, int l, const Rat& c);
  static GenSymOp unit() { return term(0, 0, Rat(1)); }  // Q^{00}

  const std::map<std::pair<int, int>, Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  GenSymOp operator+(const GenSymOp& o) const;
  GenSymOp operator-(const GenSymOp& o) const;
  GenSymOp operator-() const;
  GenSymOp scaled(const Rat& k) const;
  bool operator==(const GenSymOp& o) const { return coeffs_ == o.coeffs_; }

  std::string str() const;

 private:
  void set(int k, int l, const Rat& c);
  std::map<std::pair<int, int>, Rat> coeffs_;
  friend GenSymOp product(const GenSymOp&, const GenSymOp&);
};

// associative normal-ordered product
GenSymOp product(const GenSymOp& P, const GenSymOp& Q);

// operator commutator PQ - QP
GenSymOp op_commutator(const GenSymOp& P, const GenSymOp& Q);

// bracket of the evolutionary vector fields (Pu)d_u, (Qu)d_u: equals QP - PQ
GenSymOp vf_bracket(const GenSymOp& P, const GenSymOp& Q);

// closed commutator formula: [Q^{kl}, Q^{k'l'}] as the double binomial sum
GenSymOp commutator_closed(int k, int l, int kp, int lp);

// action on solutions; every output term is residual-checked
SolutionSum gensym_apply(const GenSymOp& P, const HeatExpr& e);
SolutionSum gensym_apply(const GenSymOp& P, const SolutionSum& e);

// characteristic correspondence with the Lie algebra: Pt -> -Q^{02},
// D -> -(2Q^{11} + 1/2 Q^{00}), K -> -Q^{20}, Gx -> -Q^{10}, Px -> -Q^{01},
// I -> Q^{00}; signs pinned by the characteristic oracle (kept as a test)
GenSymOp from_lie(const AlgElement& X);

struct DimLambdaResult {
  int dim;
  std::vector<GenSymOp> basis;  // {Q^{k, n-k}}
};
// dim Lambda^{[n]} = n+1 with the verified monomial basis
DimLambdaResult dim_lambda(int n);

// heat polynomial h_n: h_0 = 1, h_1 = x, h_{n+1} = x h_n + 2 n t h_{n-1}
RatFunc heat_polynomial(int n);

}  // namespace heatsym
