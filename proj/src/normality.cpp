#include "stabcat/normality.hpp"

#include "stabcat/error.hpp"
#include "stabcat/torsion.hpp"

namespace stabcat {

namespace {

bool injective(const Matrix& m) { return rank(m) == m.cols(); }

Morphism inverse(const Morphism& f) {
  std::vector<Matrix> comps;
  for (const auto& c : f.components()) {
    require(c.rows() == c.cols(), ErrorKind::InternalAssertion,
            "inverting a non-square component");
    auto sol = solve(c, Matrix::identity(c.field(), c.rows()));
    require(sol && rank(c) == c.rows(), ErrorKind::InternalAssertion,
            "inverting a singular component");
    comps.push_back(sol->particular);
  }
  return Morphism(f.target(), f.source(), std::move(comps));
}

// Exactness of 0 -> (X, A) -> (X, B) -> (X, C) for the composable pair
// p : A -> B, g : B -> C, over every oracle object X.
bool is_kernel_of(const Morphism& p, const Morphism& g) {
  for (const auto& x : oracle_objects(p.source())) {
    StableHom xa(x, p.source()), xb(x, p.target()), xc(x, g.target());
    Matrix u = postcompose_matrix(p, xa, xb);
    Matrix v = postcompose_matrix(g, xb, xc);
    if (!injective(u) || !exact_at_middle(u, v)) return false;
  }
  return true;
}

bool envelope_of_ring_projective(const QuiverPtr& q, PrimeField field) {
  return is_projective(injective_envelope(regular(q, field)).injective);
}

}  // namespace

PushoutSequence alpha_pushout(const SES& ses, const Morphism& alpha) {
  require(alpha.source() == ses.left(), ErrorKind::DimensionMismatch,
          "alpha must start at the left term of the sequence");
  require(is_projective(alpha.target()), ErrorKind::NotProjective,
          "alpha must end at a projective module");
  Pushout po = pushout(ses.mono, alpha);
  Morphism epi = induced_from_pushout(po, ses.epi,
                                      Morphism::zero(alpha.target(), ses.right()));
  SES result = make_ses(po.along_second, std::move(epi));
  return {ses, alpha, std::move(result)};
}

std::optional<Morphism> sequence_splits(const SES& ses) {
  return split_epi(ses.epi);
}

CriterionReport is_normal_epi(const Morphism& f) {
  require(f.is_surjective(), ErrorKind::NotEpi,
          "is_normal_epi needs a surjective morphism");
  require(is_stable_epi(f).verdict, ErrorKind::NotEpi,
          "morphism is not a stable epimorphism");
  SES ses = ses_of_epi(f);
  const Representation& k = ses.left();

  bool fast = true;
  std::optional<Morphism> failing;
  for (std::size_t i = 0; i < k.vertex_count() && fast; ++i) {
    Representation p = projective(k.quiver_ptr(), k.field(), i);
    for (const auto& alpha : hom_basis(k, p)) {
      if (!sequence_splits(alpha_pushout(ses, alpha).result)) {
        fast = false;
        failing = alpha;
        break;
      }
    }
  }

  std::optional<bool> oracle;
  if (has_oracle(k.quiver())) {
    // f̲ is a cokernel of ker f̲: 0 -> (B,X) -> (A,X) -> (K,X) exact.
    bool ok = true;
    for (const auto& x : oracle_objects(k)) {
      StableHom bx(f.target(), x), ax(f.source(), x), kx(k, x);
      Matrix u = precompose_matrix(f, bx, ax);
      Matrix v = precompose_matrix(ses.mono, ax, kx);
      if (!injective(u) || !exact_at_middle(u, v)) {
        ok = false;
        break;
      }
    }
    oracle = ok;
    require(ok == fast, ErrorKind::OracleMismatch,
            "is_normal_epi: oracle disagrees with the splitting test");
  }

  CriterionReport r;
  r.verdict = fast;
  r.fast_path = fast;
  r.oracle = oracle;
  r.method = oracle ? Method::Both : Method::FastPath;
  if (failing)
    r.witness = Witness{"alpha", {{"alpha", *failing}}, {{"kernel", k}}};
  return r;
}

NormalMonoCertificate normal_mono_certificate(const Morphism& f) {
  require(is_stable_mono(f).verdict, ErrorKind::NotMono,
          "morphism is not a stable monomorphism");
  require(envelope_of_ring_projective(f.source().quiver_ptr(), f.source().field()),
          ErrorKind::NotAbelianCase,
          "injective envelope of the regular module is not projective");
  Morphism p = f.is_surjective() ? f : epi_representative(f).map;
  Embedded ker = as_representation(kernel(p));
  require(is_projective(ker.object), ErrorKind::InternalAssertion,
          "kernel of a stable mono representative is not projective");
  Envelope env = injective_envelope(ker.object);
  require(is_projective(env.injective), ErrorKind::InternalAssertion,
          "envelope of a projective is not projective in the abelian case");

  HomSpace ext(p.source(), env.injective);
  auto phi = solve_linear(
      ext, [&](const Morphism& g) { return flatten(compose(g, ker.inclusion)); },
      flatten(env.map));
  require(phi.has_value(), ErrorKind::InternalAssertion,
          "envelope map does not extend over the kernel inclusion");

  Quotient ck = cokernel(env.map);
  HomSpace out(p.target(), ck.object);
  const Morphism rhs = compose(ck.projection, *phi);
  auto fprime = solve_linear(
      out, [&](const Morphism& g) { return flatten(compose(g, p)); }, flatten(rhs));
  require(fprime.has_value(), ErrorKind::InternalAssertion,
          "induced map on the quotient does not exist");

  std::optional<bool> validated;
  if (has_oracle(p.source().quiver())) {
    validated = is_kernel_of(p, *fprime);
    require(*validated, ErrorKind::OracleMismatch,
            "certificate fails the kernel property");
  }
  return {std::move(p),     std::move(ker),     std::move(env),
          std::move(*phi),  std::move(ck),      std::move(*fprime),
          validated};
}

NonNormalMono non_normal_mono_witness(const QuiverPtr& q, PrimeField field) {
  std::optional<std::size_t> best;
  std::size_t best_dim = 0;
  for (std::size_t i = 0; i < q->vertex_count(); ++i) {
    Representation p = projective(q, field, i);
    if (is_projective(injective_envelope(p).injective)) continue;
    if (!best || p.total_dim() < best_dim) {
      best = i;
      best_dim = p.total_dim();
    }
  }
  require(best.has_value(), ErrorKind::NoneExists,
          "every indecomposable projective has a projective envelope");
  Envelope env = injective_envelope(projective(q, field, *best));
  Morphism p = cokernel(env.map).projection;
  require(is_stable_mono(p).verdict, ErrorKind::InternalAssertion,
          "witness map is not a stable mono");

  NonNormalMono w{*best, env, p};
  if (has_oracle(*q)) {
    // No map out of the quotient into an indecomposable has p̲ as kernel.
    for (const auto& c : oracle_objects(p.source())) {
      StableHom bc(p.target(), c);
      for (const auto& g : bc.representatives()) {
        ++w.candidates_tested;
        require(!is_kernel_of(p, g), ErrorKind::OracleMismatch,
                "non-normal witness is the kernel of a tested map");
      }
    }
  }
  return w;
}

std::optional<StableEnvelope> stable_envelope_procedure(const QuiverPtr& q,
                                                        PrimeField field) {
  const Representation lambda = regular(q, field);
  Envelope env = injective_envelope(lambda);
  if (is_projective(env.injective)) return std::nullopt;

  TorsionSplit ts = canonical_split(env.injective);
  const Morphism to_projective_part = compose(ts.projection, env.map);
  SubRep ker = kernel(to_projective_part);
  Embedded p1 = as_representation(ker);
  Morphism embedding = restrict(env.map, ker, ts.torsion);
  const Representation& i1 = ts.torsion_part.object;

  const bool ok = !p1.object.is_zero() && is_projective(p1.object) &&
                  split_mono(p1.inclusion).has_value() && is_stable_module(i1) &&
                  is_injective(i1) && embedding.is_injective() &&
                  contains(image(embedding), socle(i1));
  if (!ok) return stable_envelope_iterative(q, field);
  return StableEnvelope{p1.object, p1.inclusion, i1, std::move(embedding)};
}

std::optional<StableEnvelope> stable_envelope_iterative(const QuiverPtr& q,
                                                        PrimeField field) {
  const Representation lambda = regular(q, field);
  if (is_projective(injective_envelope(lambda).injective)) return std::nullopt;

  Representation p = lambda;
  Morphism inclusion = Morphism::identity(lambda);
  for (std::size_t step = 0; step <= lambda.total_dim(); ++step) {
    require(!p.is_zero(), ErrorKind::InternalAssertion,
            "summand removal exhausted the regular module");
    Envelope env = injective_envelope(p);
    if (is_stable_module(env.injective))
      return StableEnvelope{p, inclusion, env.injective, env.map};

    // Split off the first indecomposable summand of the projective part.
    Quotient sh = sharp(env.injective);
    Cover c = projective_cover(sh.object);
    std::size_t j = 0;
    while (c.multiplicities[j] == 0) ++j;
    Representation pj = projective(q, field, j);
    std::vector<Matrix> first;
    for (std::size_t v = 0; v < pj.vertex_count(); ++v)
      first.push_back(Matrix::identity(field, c.projective.dim(v))
                          .block(0, 0, pj.dim(v), c.projective.dim(v)));
    Morphism to_first(c.projective, pj, std::move(first));
    Morphism onto = compose(to_first, compose(inverse(c.map), sh.projection));

    Embedded next = as_representation(kernel(compose(onto, env.map)));
    inclusion = compose(inclusion, next.inclusion);
    p = next.object;
  }
  fail(ErrorKind::InternalAssertion, "summand removal did not terminate");
}

BimorphismWitness bimorphism_witness(const QuiverPtr& q, PrimeField field) {
  auto se = stable_envelope_procedure(q, field);
  require(se.has_value(), ErrorKind::NoneExists,
          "injective envelope of the regular module is projective");

  BimorphismWitness w;
  Morphism embedding;
  std::size_t best_dim = 0;
  for (std::size_t i = 0; i < q->vertex_count(); ++i) {
    Representation pi = projective(q, field, i);
    Envelope env = injective_envelope(pi);
    if (!is_stable_module(env.injective)) continue;
    if (!w.vertex || pi.total_dim() < best_dim) {
      w.vertex = i;
      best_dim = pi.total_dim();
      w.projective = pi;
      w.injective = env.injective;
      embedding = env.map;
    }
  }
  if (!w.vertex) {
    w.projective = se->projective;
    w.injective = se->injective;
    embedding = se->embedding;
  }
  w.p = cokernel(embedding).projection;
  w.mono = is_stable_mono(w.p).verdict;
  w.epi = is_stable_epi(w.p).verdict;
  w.iso = is_stable_iso(w.p).verdict;
  w.split_mono = is_stable_split_mono(w.p).verdict;
  require(w.mono && w.epi && !w.iso && !w.split_mono, ErrorKind::InternalAssertion,
          "bimorphism witness has the wrong flags");
  return w;
}

}  // namespace stabcat
