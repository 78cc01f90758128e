#include "stabcat/torsion.hpp"

#include "stabcat/error.hpp"

namespace stabcat {

SubRep torsion_submodule(const Representation& m) {
  const Representation lambda = regular(m.quiver_ptr(), m.field());
  const HomSpace forms(m, lambda);
  std::vector<Subspace> spaces;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    Matrix stacked(m.field(), 0, m.dim(v));
    for (std::size_t k = 0; k < forms.dim(); ++k)
      stacked = vstack(stacked, forms.element(k).component(v));
    spaces.push_back(kernel(stacked));
  }
  return SubRep{m, std::move(spaces)};
}

Quotient sharp(const Representation& m) {
  return quotient(torsion_submodule(m));
}

TorsionSplit canonical_split(const Representation& m) {
  SubRep t = torsion_submodule(m);
  Quotient q = quotient(t);
  require(is_projective(q.object), ErrorKind::SplitAssertionFailed,
          "torsionfree quotient is not projective");
  Embedded tp = as_representation(t);
  require(HomSpace(tp.object, regular(m.quiver_ptr(), m.field())).dim() == 0,
          ErrorKind::SplitAssertionFailed, "torsion part has a nonzero form");
  auto section = split_epi(q.projection);
  require(section.has_value(), ErrorKind::SplitAssertionFailed,
          "projection onto the torsionfree quotient does not split");
  Morphism idem = Morphism::identity(m) - compose(*section, q.projection);
  Morphism retraction = restrict(idem, full_subrep(m), t);
  // restrict() rebuilds the full subrepresentation, which equals m itself.
  retraction = Morphism(m, tp.object, retraction.components());
  return {m,
          std::move(t),
          std::move(tp),
          q.object,
          q.projection,
          std::move(*section),
          std::move(retraction)};
}

bool is_stable_module(const Representation& m) {
  return HomSpace(m, regular(m.quiver_ptr(), m.field())).dim() == 0;
}

Morphism sharp_map(const Morphism& f) {
  Quotient a = sharp(f.source());
  Quotient b = sharp(f.target());
  return induced_on_quotient(a, compose(b.projection, f));
}

Morphism torsion_map(const Morphism& f) {
  return restrict(f, torsion_submodule(f.source()),
                  torsion_submodule(f.target()));
}

}  // namespace stabcat
