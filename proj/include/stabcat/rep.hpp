#pragma once

// Finite-dimensional representations of a quiver over a prime field, i.e.
// finite-dimensional modules over the path algebra kQ, together with the
// homological toolkit the stable category is built from.
//
// Conventions: action[a] maps coordinates at source(a) to coordinates at
// target(a) (column vectors), and a morphism f satisfies
//   f[target(a)] * M.action[a] == N.action[a] * f[source(a)]
// for every arrow a.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stabcat/exactfield.hpp"
#include "stabcat/quiver.hpp"

namespace stabcat {

using QuiverPtr = std::shared_ptr<const Quiver>;

inline QuiverPtr share(Quiver q) {
  return std::make_shared<const Quiver>(std::move(q));
}

class Representation {
 public:
  Representation() = default;
  /// Throws DimensionMismatch if an arrow matrix has the wrong shape.
  Representation(QuiverPtr quiver, PrimeField field,
                 std::vector<std::size_t> dims, std::vector<Matrix> action);

  static Representation zero(QuiverPtr quiver, PrimeField field);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const PrimeField& field() const { return field_; }
  std::size_t vertex_count() const { return dims_.size(); }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& action(std::size_t a) const { return action_.at(a); }
  const std::vector<Matrix>& actions() const { return action_; }

  /// Linear map along a path that starts at `start`.
  Matrix path_action(std::size_t start, const Path& p) const;

  bool same_quiver(const Representation& other) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.same_quiver(b) && a.field_ == b.field_ && a.dims_ == b.dims_ &&
           a.action_ == b.action_;
  }

 private:
  QuiverPtr quiver_;
  PrimeField field_{};
  std::vector<std::size_t> dims_;
  std::vector<Matrix> action_;
};

class Morphism {
 public:
  Morphism() = default;
  /// Throws DimensionMismatch on bad shapes and InvalidInput when the
  /// commutation condition fails.
  Morphism(Representation source, Representation target,
           std::vector<Matrix> components);

  static Morphism zero(const Representation& source,
                       const Representation& target);
  static Morphism identity(const Representation& m);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const Matrix& component(std::size_t v) const { return comp_.at(v); }
  const std::vector<Matrix>& components() const { return comp_; }

  bool is_zero() const;
  bool is_injective() const;   // at every vertex
  bool is_surjective() const;  // at every vertex

  Morphism operator+(const Morphism& rhs) const;
  Morphism operator-(const Morphism& rhs) const;
  Morphism scaled(Scalar s) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Representation source_;
  Representation target_;
  std::vector<Matrix> comp_;
};

/// g ∘ f.
Morphism compose(const Morphism& g, const Morphism& f);

/// Components of f concatenated vertex by vertex, each row-major.
Vector flatten(const Morphism& f);
Morphism unflatten(const Representation& source, const Representation& target,
                   const Vector& coords);

/// Hom(A, B) with its canonical basis: the RREF basis of the solution space of
/// the commutation system, in flattened coordinates.
class HomSpace {
 public:
  HomSpace(Representation source, Representation target);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  std::size_t dim() const { return space_.dim(); }
  const Subspace& space() const { return space_; }

  Morphism element(std::size_t k) const;
  Morphism combination(const Vector& coeffs) const;
  std::vector<Morphism> basis() const;
  /// Coefficients of f in the basis.
  Vector coordinates(const Morphism& f) const;

 private:
  Representation source_;
  Representation target_;
  Subspace space_;
};

std::vector<Morphism> hom_basis(const Representation& a,
                                const Representation& b);

/// Finds the RREF-canonical g in `hom` with map(g) == target, where `map` is
/// linear.  nullopt when no such g exists.
std::optional<Morphism> solve_linear(
    const HomSpace& hom, const std::function<Vector(const Morphism&)>& map,
    const Vector& target);

// ------------------------------------------------------------ subobjects

/// Arrow-closed family of subspaces of a representation.
struct SubRep {
  Representation parent;
  std::vector<Subspace> spaces;

  std::vector<std::size_t> dims() const;
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

/// Throws InvalidInput if the spaces are not arrow-closed.
SubRep make_subrep(const Representation& parent, std::vector<Subspace> spaces);
SubRep zero_subrep(const Representation& m);
SubRep full_subrep(const Representation& m);
SubRep intersect(const SubRep& a, const SubRep& b);
SubRep sum(const SubRep& a, const SubRep& b);
/// b ⊆ a.
bool contains(const SubRep& a, const SubRep& b);
bool operator==(const SubRep& a, const SubRep& b);

/// Smallest subrepresentation containing the given vectors at `vertex`.
SubRep generated_subrep(const Representation& m, std::size_t vertex,
                        const std::vector<Vector>& generators);

struct Embedded {
  Representation object;
  Morphism inclusion;
};

/// The subrepresentation as a module in the coordinates of its RREF bases.
Embedded as_representation(const SubRep& s);

struct Quotient {
  Representation object;
  Morphism projection;
  /// Vertex-wise linear section of the projection (inclusion of the
  /// complement coordinate vectors); not a module map in general.
  std::vector<Matrix> section;
};

/// Quotient by s, using the complement of each RREF basis as coordinates.
Quotient quotient(const SubRep& s);

/// The map parent/S -> Z induced by phi : parent -> Z vanishing on S.
Morphism induced_on_quotient(const Quotient& q, const Morphism& phi);

SubRep kernel(const Morphism& f);
SubRep image(const Morphism& f);
Quotient cokernel(const Morphism& f);

/// Image of a subrepresentation of f.source() under f.
SubRep image(const Morphism& f, const SubRep& s);
/// Preimage of a subrepresentation of f.target().
SubRep preimage(const Morphism& f, const SubRep& s);

/// f restricted to src and corestricted to dst, between the objects of
/// as_representation(src) and as_representation(dst).  Requires f(src) ⊆ dst.
Morphism restrict(const Morphism& f, const SubRep& src, const SubRep& dst);

// ------------------------------------------------------------ biproducts

struct DirectSum {
  Representation object;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

DirectSum direct_sum(const std::vector<Representation>& parts);
DirectSum direct_sum(const Representation& a, const Representation& b);

/// [f_1 ... f_k] : ⊕ A_i -> B.
Morphism copair(const DirectSum& sum, const std::vector<Morphism>& legs);
/// (f_1; ...; f_k) : A -> ⊕ B_i.
Morphism pair(const DirectSum& sum, const std::vector<Morphism>& legs);

struct Pushout {
  Representation object;   // D
  Morphism along_first;    // h' : B -> D, where f : A -> B
  Morphism along_second;   // f' : Y -> D, where h : A -> Y
  DirectSum sum;           // B ⊕ Y
  Quotient quotient;       // (B ⊕ Y) / image(f, -h)
};

/// Pushout of f : A -> B and h : A -> Y.  along_first ∘ f == along_second ∘ h,
/// and along_second is the pushout of f along h.
Pushout pushout(const Morphism& f, const Morphism& h);

/// The map D -> Z induced by u : B -> Z and v : Y -> Z with u f == v h.
Morphism induced_from_pushout(const Pushout& po, const Morphism& u,
                              const Morphism& v);

// ------------------------------------------------------------ SES

struct SES {
  Morphism mono;  // A -> B
  Morphism epi;   // B -> C

  const Representation& left() const { return mono.source(); }
  const Representation& middle() const { return mono.target(); }
  const Representation& right() const { return epi.target(); }
};

/// Throws InvalidInput unless mono is injective, epi surjective and
/// image(mono) == kernel(epi).
SES make_ses(Morphism mono, Morphism epi);
/// 0 -> Ker f -> A -> B -> 0 for a surjective f.
SES ses_of_epi(const Morphism& f);

// ------------------------------------------------------------ standard modules

Representation simple(const QuiverPtr& q, PrimeField field, std::size_t i);
/// P_i: basis of (P_i)_j is the set of paths i -> j; arrows compose.
Representation projective(const QuiverPtr& q, PrimeField field, std::size_t i);
/// I_i: basis of (I_i)_j is dual to the paths j -> i; arrows truncate.
Representation injective(const QuiverPtr& q, PrimeField field, std::size_t i);
/// The regular module, P_1 ⊕ ... ⊕ P_n.
Representation regular(const QuiverPtr& q, PrimeField field);
DirectSum regular_sum(const QuiverPtr& q, PrimeField field);

/// The morphism P_i -> M sending the trivial path to x ∈ M_i.
Morphism map_from_projective(std::size_t i, const Representation& m,
                             const Vector& x);
/// The morphism M -> I_i determined by the linear form phi on M_i.
Morphism map_to_injective(const Representation& m, std::size_t i,
                          const Vector& phi);

/// Interval module M[lo..hi] (0-based, inclusive) of an A_n orientation.
Representation interval(const QuiverPtr& q, PrimeField field, std::size_t lo,
                        std::size_t hi);
/// All n(n+1)/2 interval modules ordered by (lo, hi).  Throws NotAnQuiver.
std::vector<Representation> an_indecomposables(const QuiverPtr& q,
                                               PrimeField field);

// ------------------------------------------------------------ structure

SubRep radical(const Representation& m);
SubRep socle(const Representation& m);
Quotient top(const Representation& m);

struct Cover {
  Representation projective;          // ⊕ P_i^{m_i}, vertex order
  Morphism map;                       // surjective, kernel inside the radical
  std::vector<std::size_t> multiplicities;
};

struct Envelope {
  Representation injective;           // ⊕ I_i^{s_i}, vertex order
  Morphism map;                       // injective and essential
  std::vector<std::size_t> multiplicities;
};

Cover projective_cover(const Representation& m);
Envelope injective_envelope(const Representation& m);
bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

/// r with r ∘ f == id, if one exists.
std::optional<Morphism> split_mono(const Morphism& f);
/// s with f ∘ s == id, if one exists.
std::optional<Morphism> split_epi(const Morphism& f);

}  // namespace stabcat
