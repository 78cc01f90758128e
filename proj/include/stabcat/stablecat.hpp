#pragma once

// The projectively stable category: hom spaces modulo maps that factor
// through a projective, the mono/epi/split/iso criteria, stable kernels and
// the pushout lifting test.
//
// Every criterion has a fast path built from module-level data.  On A_n
// quivers an independent oracle evaluates the categorical definition against
// all interval modules (they exhaust the indecomposables); the two must agree
// or OracleMismatch is thrown.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabcat/rep.hpp"

namespace stabcat {

class StableHom {
 public:
  StableHom(Representation a, Representation b);

  const Representation& source() const { return hom_.source(); }
  const Representation& target() const { return hom_.target(); }
  const HomSpace& hom() const { return hom_; }
  /// Hom coordinates of the maps factoring through a projective.
  const Subspace& trivial() const { return trivial_; }
  /// Projective cover q : Q ->> B used to detect those maps.
  const Cover& cover() const { return cover_; }

  std::size_t hom_dim() const { return hom_.dim(); }
  std::size_t quotient_dim() const { return hom_.dim() - trivial_.dim(); }

  /// Canonical quotient coordinates of f (length quotient_dim()).
  Vector project(const Morphism& f) const;
  bool is_trivial(const Morphism& f) const;
  /// Hom basis elements whose classes form a basis of the quotient.
  std::vector<Morphism> representatives() const;
  /// Class of the given quotient coordinates, as a representative.
  Morphism lift_class(const Vector& coords) const;
  /// g : A -> Q with cover().map ∘ g == f, when f is stably zero.
  std::optional<Morphism> factor_through_cover(const Morphism& f) const;

 private:
  HomSpace hom_;
  Cover cover_;
  HomSpace to_cover_;
  Subspace trivial_;
};

/// True when the interval-module oracle applies (A_n quivers).
bool has_oracle(const Quiver& q);
/// The interval modules of an A_n quiver, excluding projectives (they are
/// stably zero).  Throws NotAnQuiver.
std::vector<Representation> oracle_objects(const Representation& like);

/// Matrix of g ↦ f∘g from Hom̲(x, f.source()) to Hom̲(x, f.target()) in
/// quotient coordinates.
Matrix postcompose_matrix(const Morphism& f, const StableHom& from,
                          const StableHom& to);
/// Matrix of g ↦ g∘f from Hom̲(f.target(), x) to Hom̲(f.source(), x).
Matrix precompose_matrix(const Morphism& f, const StableHom& from,
                         const StableHom& to);

/// Exactness of U -u-> V -v-> W at V for linear maps given as matrices.
bool exact_at_middle(const Matrix& u, const Matrix& v);

// ------------------------------------------------------------ reports

enum class Method { FastPath, Oracle, Both };
const char* to_string(Method m);

struct Witness {
  std::string kind;
  std::vector<std::pair<std::string, Morphism>> maps;
  std::vector<std::pair<std::string, Representation>> objects;
};

struct CriterionReport {
  bool verdict = false;
  Method method = Method::FastPath;
  std::optional<bool> fast_path;
  std::optional<bool> oracle;
  std::optional<bool> definitional;
  std::optional<Witness> witness;
};

CriterionReport is_stably_zero(const Morphism& f);
CriterionReport is_stable_mono(const Morphism& f);
CriterionReport is_stable_epi(const Morphism& f);
CriterionReport is_stable_split_mono(const Morphism& f);
CriterionReport is_stable_split_epi(const Morphism& f);
CriterionReport is_stable_iso(const Morphism& f);

// ------------------------------------------------------------ constructions

/// Kernel of f̲: the kernel of f when f is surjective, otherwise the kernel
/// of its epi representative followed by the projection onto A.
Embedded stable_kernel(const Morphism& f);
/// Checks that the kernel inclusion is a kernel in the stable category by
/// testing exactness of 0 -> (X,K) -> (X,A) -> (X,B) for every oracle
/// object X.  nullopt when no oracle is available.
std::optional<bool> validate_stable_kernel(const Morphism& f,
                                           const Morphism& kernel);

struct EpiRepresentative {
  Morphism map;        // A ⊕ Q ->> B
  Morphism inclusion;  // A -> A ⊕ Q, map ∘ inclusion == f
};

/// f ⊥ q with q the projective cover of the target; same stable class.
EpiRepresentative epi_representative(const Morphism& f);

/// s : B -> Y with f' ∘ s == h' in the pushout square of the surjection
/// f : A ->> B along h : A -> Y.  Throws NotEpi unless f is surjective.
std::optional<Morphism> pushout_lift(const Morphism& f, const Morphism& h);

/// Maps into projectives that decide the pushout-lift criterion: the
/// torsionfree projection A ->> A^♯ (every map into a projective factors
/// through it) followed by a basis of Hom(A, P_i) for each vertex.
std::vector<Morphism> projective_test_maps(const Representation& a);

struct EpiWitness {
  Morphism h;                  // A -> Q, Q projective, no pushout lift
  Morphism test_map;           // g : B -> C, g∘f stably zero, g not
  Representation test_object;  // C
};

/// For a surjective f that is not a stable epi.  Throws NotEpi if f is not
/// surjective, IsActuallyEpi if f̲ is epi, NotAnQuiver without an oracle.
EpiWitness epi_witness(const Morphism& f);

}  // namespace stabcat
