#include "stabcat/rep.hpp"

#include <numeric>

#include "stabcat/error.hpp"

namespace stabcat {

namespace {

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_quiver(const Representation& a, const Representation& b,
                         const char* what) {
  require(a.same_quiver(b), ErrorKind::QuiverMismatch,
          std::string(what) + ": representations live on different quivers");
  require(a.field() == b.field(), ErrorKind::QuiverMismatch,
          std::string(what) + ": representations live over different fields");
}

Vector unit(std::size_t n, std::size_t k) {
  Vector v(n, 0);
  v[k] = 1;
  return v;
}

}  // namespace

// ------------------------------------------------------------ Representation

Representation::Representation(QuiverPtr quiver, PrimeField field,
                               std::vector<std::size_t> dims,
                               std::vector<Matrix> action)
    : quiver_(std::move(quiver)),
      field_(field),
      dims_(std::move(dims)),
      action_(std::move(action)) {
  require(quiver_ != nullptr, ErrorKind::InvalidInput, "missing quiver");
  const Quiver& q = *quiver_;
  require(dims_.size() == q.vertex_count(), ErrorKind::DimensionMismatch,
          "dimension vector has " + std::to_string(dims_.size()) +
              " entries for " + std::to_string(q.vertex_count()) + " vertices");
  require(action_.size() == q.arrow_count(), ErrorKind::DimensionMismatch,
          "need one matrix per arrow");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const Matrix& m = action_[a];
    require(m.rows() == dims_[ar.target] && m.cols() == dims_[ar.source],
            ErrorKind::DimensionMismatch,
            "matrix for arrow '" + ar.name + "' is " + shape(m.rows(), m.cols()) +
                ", expected " + shape(dims_[ar.target], dims_[ar.source]));
    require(m.field() == field_, ErrorKind::InvalidInput,
            "matrix for arrow '" + ar.name + "' is over another field");
  }
}

Representation Representation::zero(QuiverPtr quiver, PrimeField field) {
  const Quiver& q = *quiver;
  std::vector<Matrix> action(q.arrow_count(), Matrix(field, 0, 0));
  return Representation(std::move(quiver), field,
                        std::vector<std::size_t>(q.vertex_count(), 0),
                        std::move(action));
}

std::size_t Representation::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Matrix Representation::path_action(std::size_t start, const Path& p) const {
  Matrix m = Matrix::identity(field_, dims_.at(start));
  for (std::size_t a : p) m = action_.at(a) * m;
  return m;
}

bool Representation::same_quiver(const Representation& other) const {
  if (quiver_ == other.quiver_) return true;
  if (!quiver_ || !other.quiver_) return false;
  return *quiver_ == *other.quiver_;
}

// ------------------------------------------------------------ Morphism

Morphism::Morphism(Representation source, Representation target,
                   std::vector<Matrix> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      comp_(std::move(components)) {
  require_same_quiver(source_, target_, "morphism");
  const Quiver& q = source_.quiver();
  require(comp_.size() == q.vertex_count(), ErrorKind::DimensionMismatch,
          "morphism needs one component per vertex");
  for (std::size_t v = 0; v < comp_.size(); ++v)
    require(comp_[v].rows() == target_.dim(v) && comp_[v].cols() == source_.dim(v),
            ErrorKind::DimensionMismatch,
            "component at vertex " + std::to_string(v + 1) + " is " +
                shape(comp_[v].rows(), comp_[v].cols()) + ", expected " +
                shape(target_.dim(v), source_.dim(v)));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    require(comp_[ar.target] * source_.action(a) ==
                target_.action(a) * comp_[ar.source],
            ErrorKind::InvalidInput,
            "morphism does not commute with arrow '" + ar.name + "'");
  }
}

Morphism Morphism::zero(const Representation& source,
                        const Representation& target) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < source.vertex_count(); ++v)
    comps.emplace_back(source.field(), target.dim(v), source.dim(v));
  return Morphism(source, target, std::move(comps));
}

Morphism Morphism::identity(const Representation& m) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    comps.push_back(Matrix::identity(m.field(), m.dim(v)));
  return Morphism(m, m, std::move(comps));
}

bool Morphism::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

bool Morphism::is_injective() const {
  for (const auto& c : comp_)
    if (rank(c) != c.cols()) return false;
  return true;
}

bool Morphism::is_surjective() const {
  for (const auto& c : comp_)
    if (rank(c) != c.rows()) return false;
  return true;
}

Morphism Morphism::operator+(const Morphism& rhs) const {
  require(source_ == rhs.source_ && target_ == rhs.target_,
          ErrorKind::DimensionMismatch, "adding morphisms between different objects");
  std::vector<Matrix> c;
  for (std::size_t v = 0; v < comp_.size(); ++v) c.push_back(comp_[v] + rhs.comp_[v]);
  return Morphism(source_, target_, std::move(c));
}

Morphism Morphism::operator-(const Morphism& rhs) const {
  require(source_ == rhs.source_ && target_ == rhs.target_,
          ErrorKind::DimensionMismatch,
          "subtracting morphisms between different objects");
  std::vector<Matrix> c;
  for (std::size_t v = 0; v < comp_.size(); ++v) c.push_back(comp_[v] - rhs.comp_[v]);
  return Morphism(source_, target_, std::move(c));
}

Morphism Morphism::scaled(Scalar s) const {
  std::vector<Matrix> c;
  for (const auto& m : comp_) c.push_back(m.scaled(s));
  return Morphism(source_, target_, std::move(c));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  require(f.target() == g.source(), ErrorKind::DimensionMismatch,
          "compose: codomain of f is not the domain of g");
  std::vector<Matrix> c;
  for (std::size_t v = 0; v < f.components().size(); ++v)
    c.push_back(g.component(v) * f.component(v));
  return Morphism(f.source(), g.target(), std::move(c));
}

Vector flatten(const Morphism& f) {
  Vector out;
  for (const auto& c : f.components())
    out.insert(out.end(), c.entries().begin(), c.entries().end());
  return out;
}

Morphism unflatten(const Representation& source, const Representation& target,
                   const Vector& coords) {
  std::vector<Matrix> comps;
  std::size_t off = 0;
  for (std::size_t v = 0; v < source.vertex_count(); ++v) {
    Matrix m(source.field(), target.dim(v), source.dim(v));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = coords.at(off++);
    comps.push_back(std::move(m));
  }
  require(off == coords.size(), ErrorKind::DimensionMismatch,
          "coordinate vector has the wrong length");
  return Morphism(source, target, std::move(comps));
}

// ------------------------------------------------------------ HomSpace

HomSpace::HomSpace(Representation source, Representation target)
    : source_(std::move(source)), target_(std::move(target)) {
  require_same_quiver(source_, target_, "hom");
  const PrimeField& f = source_.field();
  const Quiver& q = source_.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v)
    offset[v + 1] = offset[v] + target_.dim(v) * source_.dim(v);
  const std::size_t unknowns = offset[n];

  std::size_t equations = 0;
  for (const auto& ar : q.arrows())
    equations += target_.dim(ar.target) * source_.dim(ar.source);

  // F_t * A_a - B_a * F_s = 0, one equation per entry.
  Matrix sys(f, equations, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const std::size_t s = ar.source, t = ar.target;
    const Matrix& am = source_.action(a);  // dA_t x dA_s
    const Matrix& bm = target_.action(a);  // dB_t x dB_s
    const std::size_t dat = source_.dim(t), das = source_.dim(s);
    const std::size_t dbs = target_.dim(s);
    for (std::size_t r = 0; r < target_.dim(t); ++r)
      for (std::size_t c = 0; c < das; ++c, ++row) {
        for (std::size_t k = 0; k < dat; ++k)
          sys(row, offset[t] + r * dat + k) =
              f.add(sys(row, offset[t] + r * dat + k), am(k, c));
        for (std::size_t k = 0; k < dbs; ++k)
          sys(row, offset[s] + k * das + c) =
              f.sub(sys(row, offset[s] + k * das + c), bm(r, k));
      }
  }
  space_ = kernel(sys);
}

Morphism HomSpace::element(std::size_t k) const {
  auto row = space_.basis().row(k);
  return unflatten(source_, target_, Vector(row.begin(), row.end()));
}

Morphism HomSpace::combination(const Vector& coeffs) const {
  require(coeffs.size() == dim(), ErrorKind::DimensionMismatch,
          "wrong number of coefficients");
  const PrimeField& f = source_.field();
  Vector acc(space_.ambient_dim(), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k]) continue;
    auto row = space_.basis().row(k);
    for (std::size_t j = 0; j < acc.size(); ++j)
      acc[j] = f.add(acc[j], f.mul(coeffs[k], row[j]));
  }
  return unflatten(source_, target_, acc);
}

std::vector<Morphism> HomSpace::basis() const {
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(element(k));
  return out;
}

Vector HomSpace::coordinates(const Morphism& f) const {
  require(f.source() == source_ && f.target() == target_,
          ErrorKind::DimensionMismatch, "morphism is not in this hom space");
  auto c = space_.coordinates(flatten(f));
  require(c.has_value(), ErrorKind::InternalAssertion,
          "valid morphism outside its hom space");
  return *c;
}

std::vector<Morphism> hom_basis(const Representation& a,
                                const Representation& b) {
  return HomSpace(a, b).basis();
}

std::optional<Morphism> solve_linear(
    const HomSpace& hom, const std::function<Vector(const Morphism&)>& map,
    const Vector& target) {
  const PrimeField& f = hom.source().field();
  Matrix cols(f, target.size(), hom.dim());
  for (std::size_t k = 0; k < hom.dim(); ++k) {
    Vector v = map(hom.element(k));
    require(v.size() == target.size(), ErrorKind::DimensionMismatch,
            "solve_linear: map output has the wrong length");
    for (std::size_t r = 0; r < v.size(); ++r) cols(r, k) = v[r];
  }
  auto sol = solve(cols, Matrix::column(f, target));
  if (!sol) return std::nullopt;
  return hom.combination(sol->particular.column_vector(0));
}

// ------------------------------------------------------------ SubRep

std::vector<std::size_t> SubRep::dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : spaces) d.push_back(s.dim());
  return d;
}

std::size_t SubRep::total_dim() const {
  std::size_t t = 0;
  for (const auto& s : spaces) t += s.dim();
  return t;
}

SubRep make_subrep(const Representation& parent, std::vector<Subspace> spaces) {
  require(spaces.size() == parent.vertex_count(), ErrorKind::DimensionMismatch,
          "need one subspace per vertex");
  for (std::size_t v = 0; v < spaces.size(); ++v)
    require(spaces[v].ambient_dim() == parent.dim(v), ErrorKind::DimensionMismatch,
            "subspace ambient does not match vertex dimension");
  const Quiver& q = parent.quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    require(contains(spaces[ar.target],
                     stabcat::image(parent.action(a), spaces[ar.source])),
            ErrorKind::InvalidInput,
            "subspaces are not closed under arrow '" + ar.name + "'");
  }
  return SubRep{parent, std::move(spaces)};
}

SubRep zero_subrep(const Representation& m) {
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) s.emplace_back(m.field(), m.dim(v));
  return SubRep{m, std::move(s)};
}

SubRep full_subrep(const Representation& m) {
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    s.push_back(Subspace::full(m.field(), m.dim(v)));
  return SubRep{m, std::move(s)};
}

SubRep intersect(const SubRep& a, const SubRep& b) {
  require(a.parent == b.parent, ErrorKind::DimensionMismatch,
          "intersect: different parents");
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < a.spaces.size(); ++v)
    s.push_back(intersect(a.spaces[v], b.spaces[v]));
  return SubRep{a.parent, std::move(s)};
}

SubRep sum(const SubRep& a, const SubRep& b) {
  require(a.parent == b.parent, ErrorKind::DimensionMismatch, "sum: different parents");
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < a.spaces.size(); ++v)
    s.push_back(sum(a.spaces[v], b.spaces[v]));
  return SubRep{a.parent, std::move(s)};
}

bool contains(const SubRep& a, const SubRep& b) {
  require(a.parent == b.parent, ErrorKind::DimensionMismatch,
          "contains: different parents");
  for (std::size_t v = 0; v < a.spaces.size(); ++v)
    if (!contains(a.spaces[v], b.spaces[v])) return false;
  return true;
}

bool operator==(const SubRep& a, const SubRep& b) {
  return a.parent == b.parent && a.spaces == b.spaces;
}

SubRep generated_subrep(const Representation& m, std::size_t vertex,
                        const std::vector<Vector>& generators) {
  const Quiver& q = m.quiver();
  Matrix gens(m.field(), m.dim(vertex), generators.size());
  for (std::size_t k = 0; k < generators.size(); ++k)
    for (std::size_t r = 0; r < m.dim(vertex); ++r) gens(r, k) = generators[k].at(r);
  std::vector<Subspace> spaces;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    Matrix acc(m.field(), m.dim(j), 0);
    for (const Path& p : q.paths(vertex, j)) acc = hstack(acc, m.path_action(vertex, p) * gens);
    spaces.push_back(Subspace::column_space(acc));
  }
  return make_subrep(m, std::move(spaces));
}

Embedded as_representation(const SubRep& s) {
  const Representation& m = s.parent;
  const Quiver& q = m.quiver();
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix img = m.action(a) * s.spaces[ar.source].inclusion();
    // RREF bases carry the identity at their pivots, so coordinates of a
    // vector in the span are its pivot entries.
    action.push_back(img.select_rows(s.spaces[ar.target].pivots()));
  }
  Representation obj(m.quiver_ptr(), m.field(), s.dims(), std::move(action));
  std::vector<Matrix> incl;
  for (const auto& sp : s.spaces) incl.push_back(sp.inclusion());
  Morphism inclusion(obj, m, std::move(incl));
  return {std::move(obj), std::move(inclusion)};
}

Quotient quotient(const SubRep& s) {
  const Representation& m = s.parent;
  const PrimeField& f = m.field();
  const Quiver& q = m.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<Matrix> proj, sect;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < n; ++v) {
    const Subspace& sp = s.spaces[v];
    auto free = sp.free_coordinates();
    Matrix p(f, free.size(), m.dim(v));
    for (std::size_t j = 0; j < m.dim(v); ++j) {
      Vector qc = sp.quotient_coordinates(unit(m.dim(v), j));
      for (std::size_t i = 0; i < free.size(); ++i) p(i, j) = qc[i];
    }
    Matrix sec(f, m.dim(v), free.size());
    for (std::size_t i = 0; i < free.size(); ++i) sec(free[i], i) = 1;
    dims.push_back(free.size());
    proj.push_back(std::move(p));
    sect.push_back(std::move(sec));
  }
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    action.push_back(proj[ar.target] * m.action(a) * sect[ar.source]);
  }
  Representation obj(m.quiver_ptr(), f, std::move(dims), std::move(action));
  Morphism projection(m, obj, std::move(proj));
  return {std::move(obj), std::move(projection), std::move(sect)};
}

Morphism induced_on_quotient(const Quotient& q, const Morphism& phi) {
  require(phi.source() == q.projection.source(), ErrorKind::DimensionMismatch,
          "induced_on_quotient: phi does not start at the quotiented module");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < q.section.size(); ++v)
    comps.push_back(phi.component(v) * q.section[v]);
  Morphism bar(q.object, phi.target(), std::move(comps));
  require(compose(bar, q.projection) == phi, ErrorKind::InvalidInput,
          "induced_on_quotient: phi does not vanish on the submodule");
  return bar;
}

SubRep kernel(const Morphism& f) {
  std::vector<Subspace> s;
  for (const auto& c : f.components()) s.push_back(kernel(c));
  return SubRep{f.source(), std::move(s)};
}

SubRep image(const Morphism& f) {
  std::vector<Subspace> s;
  for (const auto& c : f.components()) s.push_back(column_image(c));
  return SubRep{f.target(), std::move(s)};
}

Quotient cokernel(const Morphism& f) { return quotient(image(f)); }

SubRep image(const Morphism& f, const SubRep& s) {
  require(s.parent == f.source(), ErrorKind::DimensionMismatch,
          "image: subrepresentation of another module");
  std::vector<Subspace> out;
  for (std::size_t v = 0; v < s.spaces.size(); ++v)
    out.push_back(image(f.component(v), s.spaces[v]));
  return SubRep{f.target(), std::move(out)};
}

SubRep preimage(const Morphism& f, const SubRep& s) {
  require(s.parent == f.target(), ErrorKind::DimensionMismatch,
          "preimage: subrepresentation of another module");
  std::vector<Subspace> out;
  for (std::size_t v = 0; v < s.spaces.size(); ++v)
    out.push_back(preimage(f.component(v), s.spaces[v]));
  return SubRep{f.source(), std::move(out)};
}

Morphism restrict(const Morphism& f, const SubRep& src, const SubRep& dst) {
  require(contains(dst, image(f, src)), ErrorKind::InvalidInput,
          "restrict: f does not map src into dst");
  Embedded s = as_representation(src);
  Embedded d = as_representation(dst);
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < src.spaces.size(); ++v)
    comps.push_back((f.component(v) * src.spaces[v].inclusion())
                        .select_rows(dst.spaces[v].pivots()));
  return Morphism(s.object, d.object, std::move(comps));
}

// ------------------------------------------------------------ biproducts

DirectSum direct_sum(const std::vector<Representation>& parts) {
  require(!parts.empty(), ErrorKind::InvalidInput, "direct sum of nothing");
  const Representation& first = parts.front();
  for (const auto& p : parts) require_same_quiver(first, p, "direct_sum");
  const PrimeField& f = first.field();
  const Quiver& q = first.quiver();
  const std::size_t n = q.vertex_count();

  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < n; ++v) dims[v] += p.dim(v);
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(f, dims[ar.target], dims[ar.source]);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.action(a));
      r += p.dim(ar.target);
      c += p.dim(ar.source);
    }
    action.push_back(std::move(m));
  }
  Representation obj(first.quiver_ptr(), f, dims, std::move(action));

  std::vector<Morphism> inj, proj;
  std::vector<std::size_t> off(n, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> ic, pc;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix i(f, dims[v], p.dim(v));
      Matrix pr(f, p.dim(v), dims[v]);
      for (std::size_t k = 0; k < p.dim(v); ++k) {
        i(off[v] + k, k) = 1;
        pr(k, off[v] + k) = 1;
      }
      off[v] += p.dim(v);
      ic.push_back(std::move(i));
      pc.push_back(std::move(pr));
    }
    inj.emplace_back(p, obj, std::move(ic));
    proj.emplace_back(obj, p, std::move(pc));
  }
  return {std::move(obj), std::move(inj), std::move(proj)};
}

DirectSum direct_sum(const Representation& a, const Representation& b) {
  return direct_sum(std::vector<Representation>{a, b});
}

Morphism copair(const DirectSum& sum, const std::vector<Morphism>& legs) {
  require(legs.size() == sum.injections.size() && !legs.empty(),
          ErrorKind::DimensionMismatch, "copair: wrong number of legs");
  const Representation& target = legs.front().target();
  const std::size_t n = sum.object.vertex_count();
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < n; ++v) {
    Matrix m(sum.object.field(), target.dim(v), 0);
    for (std::size_t k = 0; k < legs.size(); ++k) {
      require(legs[k].source() == sum.injections[k].source() &&
                  legs[k].target() == target,
              ErrorKind::DimensionMismatch, "copair: leg has the wrong type");
      m = hstack(m, legs[k].component(v));
    }
    comps.push_back(std::move(m));
  }
  return Morphism(sum.object, target, std::move(comps));
}

Morphism pair(const DirectSum& sum, const std::vector<Morphism>& legs) {
  require(legs.size() == sum.projections.size() && !legs.empty(),
          ErrorKind::DimensionMismatch, "pair: wrong number of legs");
  const Representation& source = legs.front().source();
  const std::size_t n = sum.object.vertex_count();
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < n; ++v) {
    Matrix m(sum.object.field(), 0, source.dim(v));
    for (std::size_t k = 0; k < legs.size(); ++k) {
      require(legs[k].target() == sum.projections[k].target() &&
                  legs[k].source() == source,
              ErrorKind::DimensionMismatch, "pair: leg has the wrong type");
      m = vstack(m, legs[k].component(v));
    }
    comps.push_back(std::move(m));
  }
  return Morphism(source, sum.object, std::move(comps));
}

Pushout pushout(const Morphism& f, const Morphism& h) {
  require(f.source() == h.source(), ErrorKind::DimensionMismatch,
          "pushout: f and h must share their domain");
  DirectSum s = direct_sum(f.target(), h.target());
  const Morphism diff = pair(s, {f, h.scaled(f.source().field().neg(1))});
  Quotient q = quotient(image(diff));
  Morphism first = compose(q.projection, s.injections[0]);
  Morphism second = compose(q.projection, s.injections[1]);
  Representation obj = q.object;
  return {std::move(obj), std::move(first), std::move(second), std::move(s),
          std::move(q)};
}

Morphism induced_from_pushout(const Pushout& po, const Morphism& u,
                              const Morphism& v) {
  return induced_on_quotient(po.quotient, copair(po.sum, {u, v}));
}

// ------------------------------------------------------------ SES

SES make_ses(Morphism mono, Morphism epi) {
  require(mono.target() == epi.source(), ErrorKind::InvalidInput,
          "SES: maps are not composable");
  require(mono.is_injective(), ErrorKind::InvalidInput, "SES: left map not injective");
  require(epi.is_surjective(), ErrorKind::InvalidInput, "SES: right map not surjective");
  require(image(mono) == kernel(epi), ErrorKind::InvalidInput,
          "SES: not exact in the middle");
  return SES{std::move(mono), std::move(epi)};
}

SES ses_of_epi(const Morphism& f) {
  require(f.is_surjective(), ErrorKind::NotEpi, "morphism is not surjective");
  Embedded k = as_representation(kernel(f));
  return SES{std::move(k.inclusion), f};
}

// ------------------------------------------------------------ standard modules

Representation simple(const QuiverPtr& qp, PrimeField field, std::size_t i) {
  const Quiver& q = *qp;
  require(i < q.vertex_count(), ErrorKind::InvalidInput, "vertex out of range");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[i] = 1;
  std::vector<Matrix> action;
  for (const auto& ar : q.arrows()) action.emplace_back(field, dims[ar.target], dims[ar.source]);
  return Representation(qp, field, std::move(dims), std::move(action));
}

Representation projective(const QuiverPtr& qp, PrimeField field, std::size_t i) {
  const Quiver& q = *qp;
  require(i < q.vertex_count(), ErrorKind::InvalidInput, "vertex out of range");
  std::vector<std::size_t> dims;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) dims.push_back(q.paths(i, j).size());
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(field, dims[ar.target], dims[ar.source]);
    const auto& from = q.paths(i, ar.source);
    for (std::size_t c = 0; c < from.size(); ++c) {
      Path longer = from[c];
      longer.push_back(a);
      m(q.path_index(i, ar.target, longer), c) = 1;
    }
    action.push_back(std::move(m));
  }
  return Representation(qp, field, std::move(dims), std::move(action));
}

Representation injective(const QuiverPtr& qp, PrimeField field, std::size_t i) {
  const Quiver& q = *qp;
  require(i < q.vertex_count(), ErrorKind::InvalidInput, "vertex out of range");
  std::vector<std::size_t> dims;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) dims.push_back(q.paths(j, i).size());
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(field, dims[ar.target], dims[ar.source]);
    const auto& from = q.paths(ar.source, i);
    for (std::size_t c = 0; c < from.size(); ++c) {
      const Path& p = from[c];
      if (p.empty() || p.front() != a) continue;
      Path rest(p.begin() + 1, p.end());
      m(q.path_index(ar.target, i, rest), c) = 1;
    }
    action.push_back(std::move(m));
  }
  return Representation(qp, field, std::move(dims), std::move(action));
}

DirectSum regular_sum(const QuiverPtr& q, PrimeField field) {
  std::vector<Representation> parts;
  for (std::size_t i = 0; i < q->vertex_count(); ++i)
    parts.push_back(projective(q, field, i));
  if (parts.empty()) return {Representation::zero(q, field), {}, {}};
  return direct_sum(parts);
}

Representation regular(const QuiverPtr& q, PrimeField field) {
  return regular_sum(q, field).object;
}

Morphism map_from_projective(std::size_t i, const Representation& m,
                             const Vector& x) {
  const Quiver& q = m.quiver();
  require(x.size() == m.dim(i), ErrorKind::DimensionMismatch,
          "map_from_projective: element has the wrong length");
  Representation p = projective(m.quiver_ptr(), m.field(), i);
  std::vector<Matrix> comps;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    const auto& ps = q.paths(i, j);
    Matrix c(m.field(), m.dim(j), ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k) {
      Vector y = m.path_action(i, ps[k]).apply(x);
      for (std::size_t r = 0; r < y.size(); ++r) c(r, k) = y[r];
    }
    comps.push_back(std::move(c));
  }
  return Morphism(std::move(p), m, std::move(comps));
}

Morphism map_to_injective(const Representation& m, std::size_t i,
                          const Vector& phi) {
  const Quiver& q = m.quiver();
  require(phi.size() == m.dim(i), ErrorKind::DimensionMismatch,
          "map_to_injective: form has the wrong length");
  Representation inj = injective(m.quiver_ptr(), m.field(), i);
  Matrix phi_row = Matrix::column(m.field(), phi).transpose();
  std::vector<Matrix> comps;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    const auto& ps = q.paths(j, i);
    Matrix c(m.field(), ps.size(), m.dim(j));
    for (std::size_t k = 0; k < ps.size(); ++k)
      c.set_block(k, 0, phi_row * m.path_action(j, ps[k]));
    comps.push_back(std::move(c));
  }
  return Morphism(m, std::move(inj), std::move(comps));
}

Representation interval(const QuiverPtr& qp, PrimeField field, std::size_t lo,
                        std::size_t hi) {
  const Quiver& q = *qp;
  require(an_orientation(q).has_value(), ErrorKind::NotAnQuiver,
          "interval modules need an A_n quiver");
  require(lo <= hi && hi < q.vertex_count(), ErrorKind::InvalidInput,
          "interval out of range");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (std::size_t v = lo; v <= hi; ++v) dims[v] = 1;
  std::vector<Matrix> action;
  for (const auto& ar : q.arrows()) {
    Matrix m(field, dims[ar.target], dims[ar.source]);
    if (dims[ar.target] && dims[ar.source]) m(0, 0) = 1;
    action.push_back(std::move(m));
  }
  return Representation(qp, field, std::move(dims), std::move(action));
}

std::vector<Representation> an_indecomposables(const QuiverPtr& q,
                                               PrimeField field) {
  require(an_orientation(*q).has_value(), ErrorKind::NotAnQuiver,
          "indecomposable enumeration is only available for A_n quivers");
  std::vector<Representation> out;
  for (std::size_t lo = 0; lo < q->vertex_count(); ++lo)
    for (std::size_t hi = lo; hi < q->vertex_count(); ++hi)
      out.push_back(interval(q, field, lo, hi));
  return out;
}

// ------------------------------------------------------------ structure

SubRep radical(const Representation& m) {
  const Quiver& q = m.quiver();
  std::vector<Subspace> spaces;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    Matrix acc(m.field(), m.dim(j), 0);
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).target == j) acc = hstack(acc, m.action(a));
    spaces.push_back(Subspace::column_space(acc));
  }
  return SubRep{m, std::move(spaces)};
}

SubRep socle(const Representation& m) {
  const Quiver& q = m.quiver();
  std::vector<Subspace> spaces;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    Matrix acc(m.field(), 0, m.dim(j));
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).source == j) acc = vstack(acc, m.action(a));
    spaces.push_back(kernel(acc));
  }
  return SubRep{m, std::move(spaces)};
}

Quotient top(const Representation& m) { return quotient(radical(m)); }

Cover projective_cover(const Representation& m) {
  Quotient t = top(m);
  const std::size_t n = m.vertex_count();
  std::vector<Representation> parts;
  std::vector<Morphism> legs;
  std::vector<std::size_t> mult(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    mult[i] = t.object.dim(i);
    // The section columns are the canonical representatives of the top.
    for (std::size_t k = 0; k < mult[i]; ++k) {
      Morphism leg = map_from_projective(i, m, t.section[i].column_vector(k));
      parts.push_back(leg.source());
      legs.push_back(std::move(leg));
    }
  }
  if (parts.empty()) {
    Representation z = Representation::zero(m.quiver_ptr(), m.field());
    return {z, Morphism::zero(z, m), mult};
  }
  DirectSum s = direct_sum(parts);
  Morphism map = copair(s, legs);
  require(map.is_surjective(), ErrorKind::InternalAssertion,
          "projective cover is not surjective");
  return {std::move(s.object), std::move(map), std::move(mult)};
}

Envelope injective_envelope(const Representation& m) {
  SubRep soc = socle(m);
  const std::size_t n = m.vertex_count();
  std::vector<Representation> parts;
  std::vector<Morphism> legs;
  std::vector<std::size_t> mult(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    // Pivot coordinate forms restrict to the dual basis of the socle.
    for (std::size_t c : soc.spaces[i].pivots()) {
      Morphism leg = map_to_injective(m, i, unit(m.dim(i), c));
      parts.push_back(leg.target());
      legs.push_back(std::move(leg));
      ++mult[i];
    }
  }
  if (parts.empty()) {
    Representation z = Representation::zero(m.quiver_ptr(), m.field());
    return {z, Morphism::zero(m, z), mult};
  }
  DirectSum s = direct_sum(parts);
  Morphism map = pair(s, legs);
  require(map.is_injective(), ErrorKind::InternalAssertion,
          "injective envelope map is not injective");
  return {std::move(s.object), std::move(map), std::move(mult)};
}

bool is_projective(const Representation& m) {
  const Quiver& q = m.quiver();
  SubRep rad = radical(m);
  std::size_t cover_dim = 0;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    const std::size_t mult = m.dim(i) - rad.spaces[i].dim();
    for (std::size_t j = 0; j < q.vertex_count(); ++j)
      cover_dim += mult * q.paths(i, j).size();
  }
  return cover_dim == m.total_dim();
}

bool is_injective(const Representation& m) {
  const Quiver& q = m.quiver();
  SubRep soc = socle(m);
  std::size_t env_dim = 0;
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    for (std::size_t j = 0; j < q.vertex_count(); ++j)
      env_dim += soc.spaces[i].dim() * q.paths(j, i).size();
  return env_dim == m.total_dim();
}

std::optional<Morphism> split_mono(const Morphism& f) {
  HomSpace hom(f.target(), f.source());
  return solve_linear(
      hom, [&](const Morphism& r) { return flatten(compose(r, f)); },
      flatten(Morphism::identity(f.source())));
}

std::optional<Morphism> split_epi(const Morphism& f) {
  HomSpace hom(f.target(), f.source());
  return solve_linear(
      hom, [&](const Morphism& s) { return flatten(compose(f, s)); },
      flatten(Morphism::identity(f.target())));
}

}  // namespace stabcat
