#pragma once

// Torsion submodule t(M) (common kernel of all forms M -> Λ), the torsionfree
// quotient M^♯ = M / t(M), and the splitting M ≅ t(M) ⊕ M^♯ that holds for
// finite-dimensional path algebras.

#include "stabcat/rep.hpp"

namespace stabcat {

struct TorsionSplit {
  Representation module;
  SubRep torsion;
  Embedded torsion_part;   // t(M) with its inclusion into M
  Representation sharp;    // M^♯, projective
  Morphism projection;     // M -> M^♯
  Morphism section;        // M^♯ -> M, projection ∘ section == id
  Morphism retraction;     // M -> t(M), retraction ∘ inclusion == id
};

SubRep torsion_submodule(const Representation& m);

/// M^♯ together with the canonical projection.
Quotient sharp(const Representation& m);

/// Throws SplitAssertionFailed if M^♯ is not projective or t(M) has a
/// nonzero form; neither can happen over a path algebra.
TorsionSplit canonical_split(const Representation& m);

/// No nonzero projective summand, equivalently Hom(M, Λ) = 0.
bool is_stable_module(const Representation& m);

/// f^♯ : A^♯ -> B^♯.
Morphism sharp_map(const Morphism& f);
/// t(f) : t(A) -> t(B).
Morphism torsion_map(const Morphism& f);

}  // namespace stabcat
