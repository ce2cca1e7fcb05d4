#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heatsym/liealg.hpp"
#include "heatsym/pointgroup.hpp"

namespace heatsym {

struct Subalgebra {
  std::vector<AlgElement> basis;
};

struct SubalgebraInvariants {
  int n = 0;             // dim s
  int n_hat = 0;         // dim pi_f s
  int n_check = 0;       // dim s cap r
  int n_check_prime = 0; // dim s cap <I>
};

struct NotClosedError : std::domain_error {
  using std::domain_error::domain_error;
};
struct FullAlgebraError : std::domain_error {
  using std::domain_error::domain_error;
};
// Raised when the canonical parameter or a required scaling leaves Q
// (e.g. a cube root or sqrt of a non-square); the engine works over Q.
struct IrrationalNormalizationError : std::domain_error {
  using std::domain_error::domain_error;
};

struct CanonicalForm {
  std::string label;                // "s1.1" ... "s5.1"
  std::map<std::string, Rat> params;  // "delta" / "mu" / "nu" when applicable
  EssQ witness;                     // pushes the input onto the canonical span
  std::vector<std::string> steps;   // audit log of the reduction
};

// basis must be linearly independent; true iff all pairwise brackets stay in
// the span
bool closure_check(const std::vector<AlgElement>& basis);

SubalgebraInvariants invariants(const Subalgebra& s);

// Lemma-list canonicalization with an exact conjugating witness. The witness
// is verified (independently re-derived pushforward of the input equals the
// canonical span) before returning.
CanonicalForm canonicalize(const Subalgebra& s);

bool equivalent(const Subalgebra& a, const Subalgebra& b);

// canonical representative bases, labels as in the 27-entry list
std::vector<AlgElement> canonical_basis(const std::string& label,
                                        const std::map<std::string, Rat>& params);
std::vector<std::string> canonical_labels();  // all 27 labels

struct Classify1DResult {
  enum Kind { EssentialCase, CenterCase, LinCase } kind;
  std::optional<CanonicalForm> essential;   // EssentialCase
  std::optional<SolutionSum> center_shift;  // CenterCase: conjugate by Z(center_shift)
};

Classify1DResult classify_1d_full(const AlgElement& qhat, const SolutionSum& f);

}  // namespace heatsym
