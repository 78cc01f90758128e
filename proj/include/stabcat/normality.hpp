#pragma once

// Normal epimorphisms and monomorphisms in the stable category, the pushout
// sequences α[f], and the witnesses that exist when the injective envelope
// of the regular module is not projective.

#include <optional>

#include "stabcat/rep.hpp"
#include "stabcat/stablecat.hpp"

namespace stabcat {

struct PushoutSequence {
  SES base;         // 0 -> K -> A -> B -> 0
  Morphism alpha;   // K -> P, P projective
  SES result;       // 0 -> P -> D -> B -> 0
};

/// Pushout of `ses` along alpha.  Throws DimensionMismatch if alpha does not
/// start at the left term, NotProjective if its target is not projective.
PushoutSequence alpha_pushout(const SES& ses, const Morphism& alpha);

/// Section of the epimorphism of `ses`, if the sequence splits.
std::optional<Morphism> sequence_splits(const SES& ses);

/// f must be surjective and a stable epi (NotEpi otherwise).  Tests α[f]
/// for every basis element α of Hom(Ker f, P_i) and every vertex i; on A_n
/// the verdict is cross-checked against the cokernel property of ker f̲.
/// A failing α is returned as the witness.
CriterionReport is_normal_epi(const Morphism& f);

struct NormalMonoCertificate {
  Morphism p;              // A' ->> B, stably equal to the input
  Embedded kernel;         // P = Ker p, projective
  Envelope envelope;       // P -> I, I projective
  Morphism extension;      // A' -> I extending the envelope over P
  Quotient cokernel;       // I -> I/P
  Morphism fprime;         // B -> I/P with fprime ∘ p == cokernel ∘ extension
  std::optional<bool> validated;  // p̲ = ker f̲′ on every oracle object
};

/// Throws NotMono unless f̲ is mono and NotAbelianCase unless the injective
/// envelope of the regular module is projective.
NormalMonoCertificate normal_mono_certificate(const Morphism& f);

struct NonNormalMono {
  std::size_t vertex;        // P = P_vertex
  Envelope envelope;         // P_vertex -> E(P_vertex), not projective
  Morphism p;                // E(P) ->> E(P)/P
  std::size_t candidates_tested = 0;
  bool proved_non_normal = true;  // holds whenever E(P) is not projective
};

/// p : E(P_i) ->> E(P_i)/P_i for the P_i of least dimension (then least
/// index) whose envelope is not projective.  Throws NoneExists otherwise.
NonNormalMono non_normal_mono_witness(const QuiverPtr& q, PrimeField field);

struct StableEnvelope {
  Representation projective;  // P, nonzero, summand of Λ
  Morphism inclusion;         // P -> Λ
  Representation injective;   // I, stable and injective
  Morphism embedding;         // P -> I, essential
};

/// One-step construction using the torsion splitting of E(Λ); nullopt when
/// E(Λ) is projective.
std::optional<StableEnvelope> stable_envelope_procedure(const QuiverPtr& q,
                                                        PrimeField field);
/// Removes one indecomposable projective summand of the envelope at a time.
std::optional<StableEnvelope> stable_envelope_iterative(const QuiverPtr& q,
                                                        PrimeField field);

struct BimorphismWitness {
  Representation projective;  // P
  Representation injective;   // I = E(P), stable
  Morphism p;                 // I ->> I/P
  std::optional<std::size_t> vertex;  // set when P = P_vertex
  bool mono = false;
  bool epi = false;
  bool iso = false;
  bool split_mono = false;
};

/// Throws NoneExists when E(Λ) is projective.
BimorphismWitness bimorphism_witness(const QuiverPtr& q, PrimeField field);

}  // namespace stabcat
