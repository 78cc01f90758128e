#include "stabcat/stablecat.hpp"

#include "stabcat/error.hpp"
#include "stabcat/torsion.hpp"

namespace stabcat {

// ------------------------------------------------------------ StableHom

StableHom::StableHom(Representation a, Representation b)
    : hom_(a, b),
      cover_(projective_cover(b)),
      to_cover_(std::move(a), cover_.projective) {
  const PrimeField& f = hom_.source().field();
  Matrix rows(f, 0, hom_.space().ambient_dim());
  Matrix coords(f, to_cover_.dim(), hom_.dim());
  for (std::size_t k = 0; k < to_cover_.dim(); ++k) {
    Vector c = hom_.coordinates(compose(cover_.map, to_cover_.element(k)));
    for (std::size_t j = 0; j < c.size(); ++j) coords(k, j) = c[j];
  }
  trivial_ = Subspace::row_space(coords);
}

Vector StableHom::project(const Morphism& f) const {
  return trivial_.quotient_coordinates(hom_.coordinates(f));
}

bool StableHom::is_trivial(const Morphism& f) const {
  return trivial_.contains(hom_.coordinates(f));
}

std::vector<Morphism> StableHom::representatives() const {
  std::vector<Morphism> out;
  for (std::size_t k : trivial_.free_coordinates()) out.push_back(hom_.element(k));
  return out;
}

Morphism StableHom::lift_class(const Vector& coords) const {
  auto free = trivial_.free_coordinates();
  require(coords.size() == free.size(), ErrorKind::DimensionMismatch,
          "wrong number of stable coordinates");
  Vector full(hom_.dim(), 0);
  for (std::size_t i = 0; i < free.size(); ++i) full[free[i]] = coords[i];
  return hom_.combination(full);
}

std::optional<Morphism> StableHom::factor_through_cover(const Morphism& f) const {
  return solve_linear(
      to_cover_, [&](const Morphism& g) { return flatten(compose(cover_.map, g)); },
      flatten(f));
}

// ------------------------------------------------------------ oracle

bool has_oracle(const Quiver& q) { return an_orientation(q).has_value(); }

std::vector<Representation> oracle_objects(const Representation& like) {
  std::vector<Representation> out;
  for (auto& x : an_indecomposables(like.quiver_ptr(), like.field()))
    if (!is_projective(x)) out.push_back(std::move(x));
  return out;
}

Matrix postcompose_matrix(const Morphism& f, const StableHom& from,
                          const StableHom& to) {
  auto reps = from.representatives();
  Matrix m(f.source().field(), to.quotient_dim(), reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k) {
    Vector c = to.project(compose(f, reps[k]));
    for (std::size_t r = 0; r < c.size(); ++r) m(r, k) = c[r];
  }
  return m;
}

Matrix precompose_matrix(const Morphism& f, const StableHom& from,
                         const StableHom& to) {
  auto reps = from.representatives();
  Matrix m(f.source().field(), to.quotient_dim(), reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k) {
    Vector c = to.project(compose(reps[k], f));
    for (std::size_t r = 0; r < c.size(); ++r) m(r, k) = c[r];
  }
  return m;
}

bool exact_at_middle(const Matrix& u, const Matrix& v) {
  require(u.rows() == v.cols(), ErrorKind::DimensionMismatch,
          "exact_at_middle: maps are not composable");
  return (v * u).is_zero() && rank(u) == u.rows() - rank(v);
}

const char* to_string(Method m) {
  switch (m) {
    case Method::FastPath: return "fast-path";
    case Method::Oracle: return "oracle";
    case Method::Both: return "both";
  }
  return "unknown";
}

namespace {

struct Probe {
  Representation object;
  Matrix map;
};

// Postcomposition (X, A) -> (X, B) for every oracle object X.
std::vector<Probe> post_probes(const Morphism& f) {
  std::vector<Probe> out;
  for (auto& x : oracle_objects(f.source())) {
    StableHom from(x, f.source()), to(x, f.target());
    Matrix m = postcompose_matrix(f, from, to);
    out.push_back({std::move(x), std::move(m)});
  }
  return out;
}

// Precomposition (B, X) -> (A, X) for every oracle object X.
std::vector<Probe> pre_probes(const Morphism& f) {
  std::vector<Probe> out;
  for (auto& x : oracle_objects(f.source())) {
    StableHom from(f.target(), x), to(f.source(), x);
    Matrix m = precompose_matrix(f, from, to);
    out.push_back({std::move(x), std::move(m)});
  }
  return out;
}

bool injective(const Matrix& m) { return rank(m) == m.cols(); }
bool surjective(const Matrix& m) { return rank(m) == m.rows(); }

void agree(const char* what, bool a, bool b, const char* route) {
  require(a == b, ErrorKind::OracleMismatch,
          std::string(what) + ": " + route + " disagrees with the fast path");
}

CriterionReport finish(bool fast, std::optional<bool> oracle, const char* what) {
  CriterionReport r;
  r.fast_path = fast;
  r.verdict = fast;
  r.oracle = oracle;
  if (oracle) agree(what, fast, *oracle, "oracle");
  r.method = oracle ? Method::Both : Method::FastPath;
  return r;
}

// A witness naming the first probe object where `bad` holds, together with
// the class of a kernel vector of the probe matrix (when `kernel_vector`).
std::optional<Witness> probe_witness(
    const std::vector<Probe>& probes, bool (*bad)(const Matrix&),
    const char* kind, const std::function<StableHom(const Representation&)>& space) {
  for (const auto& p : probes) {
    if (!bad(p.map)) continue;
    Witness w{kind, {}, {{"test_object", p.object}}};
    Matrix kb = kernel_basis(p.map);
    if (kb.cols() > 0) {
      StableHom sh = space(p.object);
      w.maps.push_back({"test_map", sh.lift_class(kb.column_vector(0))});
    }
    return w;
  }
  return std::nullopt;
}

SubRep torsion_of_target(const Morphism& f) {
  return torsion_submodule(f.target());
}

Embedded kernel_object(const Morphism& f) { return as_representation(kernel(f)); }

}  // namespace

// ------------------------------------------------------------ criteria

CriterionReport is_stably_zero(const Morphism& f) {
  StableHom sh(f.source(), f.target());
  const bool fast = sh.is_trivial(f);
  std::optional<bool> oracle;
  if (has_oracle(f.source().quiver())) {
    bool all_zero = true;
    for (const auto& p : post_probes(f)) all_zero = all_zero && p.map.is_zero();
    oracle = all_zero;
  }
  CriterionReport r = finish(fast, oracle, "is_stably_zero");
  if (fast) {
    if (is_projective(f.source())) {
      r.witness = Witness{"factorization",
                          {{"g", Morphism::identity(f.source())}, {"h", f}},
                          {{"Q", f.source()}}};
    } else {
      auto g = sh.factor_through_cover(f);
      require(g.has_value(), ErrorKind::InternalAssertion,
              "trivial map does not factor through the cover");
      r.witness = Witness{"factorization",
                          {{"g", *g}, {"h", sh.cover().map}},
                          {{"Q", sh.cover().projective}}};
    }
  }
  return r;
}

CriterionReport is_stable_mono(const Morphism& f) {
  Embedded k = kernel_object(f);
  const bool fast = is_projective(k.object);
  std::optional<bool> oracle;
  std::vector<Probe> probes;
  if (has_oracle(f.source().quiver())) {
    probes = post_probes(f);
    bool ok = true;
    for (const auto& p : probes) ok = ok && injective(p.map);
    oracle = ok;
  }
  CriterionReport r = finish(fast, oracle, "is_stable_mono");
  if (!fast) {
    if (oracle) {
      r.witness = probe_witness(
          probes, [](const Matrix& m) { return !injective(m); }, "test_object",
          [&](const Representation& x) { return StableHom(x, f.source()); });
    } else {
      r.witness = Witness{"kernel", {{"inclusion", k.inclusion}}, {{"kernel", k.object}}};
    }
  }
  return r;
}

CriterionReport is_stable_epi(const Morphism& f) {
  TorsionSplit a = canonical_split(f.source());
  const bool fast = contains(image(f, a.torsion), torsion_of_target(f));
  std::optional<bool> oracle;
  std::vector<Probe> probes;
  if (has_oracle(f.source().quiver())) {
    probes = pre_probes(f);
    bool ok = true;
    for (const auto& p : probes) ok = ok && injective(p.map);
    oracle = ok;
  }
  CriterionReport r = finish(fast, oracle, "is_stable_epi");
  if (!fast && oracle)
    r.witness = probe_witness(
        probes, [](const Matrix& m) { return !injective(m); }, "test_object",
        [&](const Representation& x) { return StableHom(f.target(), x); });
  return r;
}

CriterionReport is_stable_split_epi(const Morphism& f) {
  const Representation& a = f.source();
  const Representation& b = f.target();
  // Definitional: f∘s ≡ id_B modulo maps through projectives.
  HomSpace sections(b, a);
  StableHom bb(b, b);
  Matrix cols(a.field(), bb.quotient_dim(), sections.dim());
  for (std::size_t k = 0; k < sections.dim(); ++k) {
    Vector c = bb.project(compose(f, sections.element(k)));
    for (std::size_t r = 0; r < c.size(); ++r) cols(r, k) = c[r];
  }
  auto sol = solve(cols, Matrix::column(a.field(), bb.project(Morphism::identity(b))));
  const bool definitional = sol.has_value();

  Embedded k = kernel_object(f);
  const bool fast = split_mono(k.inclusion).has_value() &&
                    contains(image(f), torsion_of_target(f));
  agree("is_stable_split_epi", fast, definitional, "definitional test");

  std::optional<bool> oracle;
  std::vector<Probe> probes;
  if (has_oracle(a.quiver())) {
    probes = post_probes(f);
    bool ok = true;
    for (const auto& p : probes) ok = ok && surjective(p.map);
    oracle = ok;
  }
  CriterionReport r = finish(fast, oracle, "is_stable_split_epi");
  r.definitional = definitional;
  if (sol) {
    r.witness = Witness{
        "section",
        {{"section", sections.combination(sol->particular.column_vector(0))}},
        {}};
  } else if (oracle) {
    r.witness = probe_witness(
        probes, [](const Matrix& m) { return !surjective(m); }, "test_object",
        [&](const Representation& x) { return StableHom(x, a); });
  }
  return r;
}

CriterionReport is_stable_split_mono(const Morphism& f) {
  const Representation& a = f.source();
  const Representation& b = f.target();
  // Definitional: g∘f ≡ id_A modulo maps through projectives.
  HomSpace retractions(b, a);
  StableHom aa(a, a);
  Matrix cols(a.field(), aa.quotient_dim(), retractions.dim());
  for (std::size_t k = 0; k < retractions.dim(); ++k) {
    Vector c = aa.project(compose(retractions.element(k), f));
    for (std::size_t r = 0; r < c.size(); ++r) cols(r, k) = c[r];
  }
  auto sol = solve(cols, Matrix::column(a.field(), aa.project(Morphism::identity(a))));
  const bool definitional = sol.has_value();

  // t(A) is stably isomorphic to A and has no nonzero forms, so stable
  // equivalence on maps out of it is equality.
  TorsionSplit ts = canonical_split(a);
  const bool fast =
      split_mono(compose(f, ts.torsion_part.inclusion)).has_value();
  agree("is_stable_split_mono", fast, definitional, "definitional test");

  std::optional<bool> oracle;
  std::vector<Probe> probes;
  if (has_oracle(a.quiver())) {
    probes = pre_probes(f);
    bool ok = true;
    for (const auto& p : probes) ok = ok && surjective(p.map);
    oracle = ok;
  }
  CriterionReport r = finish(fast, oracle, "is_stable_split_mono");
  r.definitional = definitional;
  if (sol) {
    r.witness = Witness{
        "retraction",
        {{"retraction", retractions.combination(sol->particular.column_vector(0))}},
        {}};
  } else if (oracle) {
    r.witness = probe_witness(
        probes, [](const Matrix& m) { return !surjective(m); }, "test_object",
        [&](const Representation& x) { return StableHom(b, x); });
  }
  return r;
}

CriterionReport is_stable_iso(const Morphism& f) {
  const Representation& a = f.source();
  const Representation& b = f.target();
  // Definitional: one g with g∘f ≡ id_A and f∘g ≡ id_B.
  HomSpace inverses(b, a);
  StableHom aa(a, a), bb(b, b);
  const std::size_t na = aa.quotient_dim();
  Matrix cols(a.field(), na + bb.quotient_dim(), inverses.dim());
  for (std::size_t k = 0; k < inverses.dim(); ++k) {
    Morphism g = inverses.element(k);
    Vector left = aa.project(compose(g, f));
    Vector right = bb.project(compose(f, g));
    for (std::size_t r = 0; r < left.size(); ++r) cols(r, k) = left[r];
    for (std::size_t r = 0; r < right.size(); ++r) cols(na + r, k) = right[r];
  }
  Vector target = aa.project(Morphism::identity(a));
  Vector tb = bb.project(Morphism::identity(b));
  target.insert(target.end(), tb.begin(), tb.end());
  auto sol = solve(cols, Matrix::column(a.field(), target));
  const bool definitional = sol.has_value();

  Embedded k = kernel_object(f);
  const bool fast = is_projective(k.object) &&
                    split_mono(k.inclusion).has_value() &&
                    contains(image(f), torsion_of_target(f));
  agree("is_stable_iso", fast, definitional, "definitional test");

  std::optional<bool> oracle;
  std::vector<Probe> probes;
  if (has_oracle(a.quiver())) {
    probes = post_probes(f);
    bool ok = true;
    for (const auto& p : probes) ok = ok && injective(p.map) && surjective(p.map);
    oracle = ok;
  }
  CriterionReport r = finish(fast, oracle, "is_stable_iso");
  r.definitional = definitional;
  if (sol) {
    r.witness = Witness{
        "inverse",
        {{"inverse", inverses.combination(sol->particular.column_vector(0))}},
        {}};
  } else if (oracle) {
    r.witness = probe_witness(
        probes,
        [](const Matrix& m) { return !(injective(m) && surjective(m)); },
        "test_object", [&](const Representation& x) { return StableHom(x, a); });
  }
  return r;
}

// ------------------------------------------------------------ constructions

Embedded stable_kernel(const Morphism& f) {
  if (f.is_surjective()) return kernel_object(f);
  EpiRepresentative rep = epi_representative(f);
  Embedded k = kernel_object(rep.map);
  // The first summand of A ⊕ Q is A; project onto it.
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.source().vertex_count(); ++v)
    comps.push_back(k.inclusion.component(v).block(0, 0, f.source().dim(v),
                                                   k.object.dim(v)));
  Morphism to_a(k.object, f.source(), std::move(comps));
  return {std::move(k.object), std::move(to_a)};
}

std::optional<bool> validate_stable_kernel(const Morphism& f,
                                           const Morphism& kernel) {
  require(kernel.target() == f.source(), ErrorKind::DimensionMismatch,
          "kernel map does not end at the domain of f");
  if (!has_oracle(f.source().quiver())) return std::nullopt;
  for (const auto& x : oracle_objects(f.source())) {
    StableHom xk(x, kernel.source()), xa(x, f.source()), xb(x, f.target());
    Matrix u = postcompose_matrix(kernel, xk, xa);
    Matrix v = postcompose_matrix(f, xa, xb);
    if (!injective(u) || !exact_at_middle(u, v)) return false;
  }
  return true;
}

EpiRepresentative epi_representative(const Morphism& f) {
  Cover c = projective_cover(f.target());
  DirectSum ds = direct_sum(f.source(), c.projective);
  Morphism map = copair(ds, {f, c.map});
  require(map.is_surjective(), ErrorKind::InternalAssertion,
          "epi representative is not surjective");
  return {std::move(map), ds.injections[0]};
}

std::optional<Morphism> pushout_lift(const Morphism& f, const Morphism& h) {
  require(f.is_surjective(), ErrorKind::NotEpi,
          "pushout_lift needs a surjective morphism");
  Pushout po = pushout(f, h);
  HomSpace hom(f.target(), h.target());
  return solve_linear(
      hom, [&](const Morphism& s) { return flatten(compose(po.along_second, s)); },
      flatten(po.along_first));
}

std::vector<Morphism> projective_test_maps(const Representation& a) {
  std::vector<Morphism> out{sharp(a).projection};
  for (std::size_t i = 0; i < a.vertex_count(); ++i)
    for (auto& g : hom_basis(a, projective(a.quiver_ptr(), a.field(), i)))
      out.push_back(std::move(g));
  return out;
}

EpiWitness epi_witness(const Morphism& f) {
  require(f.is_surjective(), ErrorKind::NotEpi,
          "epi_witness needs a surjective morphism");
  require(has_oracle(f.source().quiver()), ErrorKind::NotAnQuiver,
          "epi_witness needs the interval-module oracle");
  CriterionReport r = is_stable_epi(f);
  require(!r.verdict, ErrorKind::IsActuallyEpi, "morphism is a stable epimorphism");
  for (const auto& x : oracle_objects(f.source())) {
    StableHom bx(f.target(), x), ax(f.source(), x);
    Matrix kb = kernel_basis(precompose_matrix(f, bx, ax));
    if (kb.cols() == 0) continue;
    Morphism g = bx.lift_class(kb.column_vector(0));
    auto h = ax.factor_through_cover(compose(g, f));
    require(h.has_value(), ErrorKind::InternalAssertion,
            "stably zero composite does not factor through the cover");
    require(!pushout_lift(f, *h).has_value(), ErrorKind::OracleMismatch,
            "extracted map into a projective admits a pushout lift");
    return {std::move(*h), std::move(g), x};
  }
  fail(ErrorKind::OracleMismatch, "no oracle counterexample for a non-epi");
}

}  // namespace stabcat
