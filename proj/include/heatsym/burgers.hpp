#pragma once

#include <vector>

#include "heatsym/heatexpr.hpp"
#include "heatsym/pointgroup.hpp"

namespace heatsym {

// Point symmetry of the Burgers equation v_t + v v_x = v_xx:
//   ttil = (a t + b)/(c t + d), xtil = (x + l1 t + l0)/(c t + d),
//   vtil = (c t + d) v - c x + l1 d - l0 c            with det A = 1.
template <class S>
struct BurgersElement {
  Mat2<S> A;
  Vec2<S> lambda;
  bool operator==(const BurgersElement&) const = default;
};

using BurgQ = BurgersElement<ScalarExt>;

BurgQ burgers_identity();
BurgQ compose_b(const BurgQ& a, const BurgQ& b);
BurgQ inverse_b(const BurgQ& a);

// the epimorphism rho: G^ess -> G^B (drops sigma)
BurgQ rho_project(const EssQ& phi);

struct BurgersPoint {
  ScalarExt t, x, v;
};
BurgersPoint apply_point_b(const BurgQ& phi, const Rat& t, const Rat& x, const Rat& v);

// Hopf-Cole transformation v = -2 u_x / u of a nonzero heat solution; the
// t-only power factors cancel, so the image is a rational function. The
// Burgers residual of the image is re-verified exactly.
RatFunc hopf_cole(const HeatExpr& u);

// transformed Burgers solution; exact, residual enforced
RatFunc apply_solution_b(const BurgQ& phi, const RatFunc& v);

bool is_in_exp_b(const BurgQ& phi);

// Structural connectedness facts at the representation level: every element
// factors into exp-members through the triangular word, the lambda part is
// directly in exp, and only the identity parameters act trivially.
struct ConnectednessReport {
  bool all_ok = true;
  std::vector<std::pair<std::string, bool>> checks;
  void add(const std::string& name, bool ok) {
    checks.emplace_back(name, ok);
    all_ok = all_ok && ok;
  }
};

ConnectednessReport connectedness_report(int samples, uint64_t seed);

// Burgers algebra as 5-vectors (Pt, D, K, Gx, Px): the g^ess machinery with
// the I row removed
using BAlg = std::array<Rat, 5>;
BAlg rho_lie(const AlgElement& X);                    // drop the I component
AlgElement lift_lie(const BAlg& Y);                   // embed with I = 0
BAlg bracket_b(const BAlg& X, const BAlg& Y);         // induced bracket

}  // namespace heatsym
