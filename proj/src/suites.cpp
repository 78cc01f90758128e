#include <functional>
#include <map>

#include "stabcat/error.hpp"
#include "stabcat/json_io.hpp"
#include "stabcat/sampling.hpp"
#include "stabcat/stablecat.hpp"
#include "stabcat/torsion.hpp"
#include "stabcat/verdict.hpp"

namespace stabcat {

namespace {

std::string quiver_label(const Quiver& q) {
  if (auto o = an_orientation(q))
    return "A" + std::to_string(q.vertex_count()) + ":" + *o;
  return to_json(q).dump();
}

struct Ctx {
  PrimeField field;
  Rng rng;
  SuiteReport report;
  std::size_t trial = 0;
  std::size_t qi = 0;
  QuiverPtr q;
  // Per-quiver facts that do not depend on the trial.
  std::map<std::size_t, bool> abelian;
  std::map<std::size_t, bool> once;

  Ctx(PrimeField f, std::uint64_t seed) : field(f), rng(seed) {}

  void check(bool ok, const std::string& what, Json instance = Json::object()) {
    ++report.checks;
    if (ok) return;
    report.failures.push_back({{"trial", trial},
                               {"quiver", quiver_label(*q)},
                               {"check", what},
                               {"instance", std::move(instance)}});
  }

  void finding(const std::string& what, Json instance) {
    report.findings.push_back({{"trial", trial},
                               {"quiver", quiver_label(*q)},
                               {"finding", what},
                               {"instance", std::move(instance)}});
  }

  bool is_abelian() {
    auto it = abelian.find(qi);
    if (it != abelian.end()) return it->second;
    const bool a = is_projective(injective_envelope(regular(q, field)).injective);
    abelian[qi] = a;
    return a;
  }

  // True the first time it is asked for the current quiver.
  bool first_visit() { return once.emplace(qi, true).second; }

  Representation rep() { return random_representation(q, field, rng); }
};

Json inst(const Morphism& f) { return {{"morphism", to_json(f)}}; }
Json inst(const Representation& m) { return {{"module", to_json(m)}}; }

bool injective_matrix(const Matrix& m) { return rank(m) == m.cols(); }

Representation stable_part(const Representation& m) {
  return as_representation(torsion_submodule(m)).object;
}

// Quotient by a submodule generated inside t(M); its kernel lies in the
// torsion submodule.
std::optional<Morphism> torsion_quotient(const Representation& m, Rng& rng) {
  SubRep t = torsion_submodule(m);
  std::vector<std::size_t> live;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (t.spaces[v].dim() > 0) live.push_back(v);
  if (live.empty()) return std::nullopt;
  const std::size_t v = live[rng.below(live.size())];
  const Matrix& basis = t.spaces[v].basis();
  Vector x(m.dim(v), 0);
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    const Scalar c = rng.scalar(m.field());
    for (std::size_t j = 0; j < x.size(); ++j)
      x[j] = m.field().add(x[j], m.field().mul(c, basis(k, j)));
  }
  return quotient(generated_subrep(m, v, {x})).projection;
}

Morphism random_stable_epi(Ctx& c) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    Morphism f = random_module_epi(c.q, c.field, c.rng);
    if (is_stable_epi(f).verdict) return f;
  }
  Representation m = c.rep();
  if (auto f = torsion_quotient(m, c.rng)) return *f;
  return Morphism::identity(m);
}

Morphism random_stable_mono(Ctx& c) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    Morphism f = random_test_morphism(c.q, c.field, c.rng);
    if (is_stable_mono(f).verdict) return f;
  }
  Representation m = c.rep();
  return as_representation(random_generated_subrep(m, c.rng)).inclusion;
}

// ------------------------------------------------------------ suites

void suite_split(Ctx& c) {
  Representation m = c.rep();
  c.check(is_stably_zero(Morphism::identity(m)).verdict == is_projective(m),
          "zero object iff projective", inst(m));
  Representation p = random_projective(c.q, c.field, c.rng);
  c.check(StableHom(m, p).quotient_dim() == 0 && StableHom(p, m).quotient_dim() == 0,
          "stable homs touching a projective vanish", inst(m));
  Representation k = c.rep();
  Representation cc = c.rng.coin() ? random_projective(c.q, c.field, c.rng) : c.rep();
  Morphism incl = direct_sum(k, cc).injections[0];
  c.check(is_stable_iso(incl).verdict == is_projective(cc),
          "split inclusion is an iso iff the cokernel is projective", inst(incl));
}

void suite_halfexact(Ctx& c) {
  if (!has_oracle(*c.q)) return;
  SES s = random_ses(c.q, c.field, c.rng);
  for (const auto& x : oracle_objects(s.middle())) {
    StableHom xa(x, s.left()), xb(x, s.middle()), xc(x, s.right());
    Matrix u = postcompose_matrix(s.mono, xa, xb);
    Matrix v = postcompose_matrix(s.epi, xb, xc);
    c.check(exact_at_middle(u, v), "stable hom sequence exact at the middle",
            {{"mono", to_json(s.mono)}, {"epi", to_json(s.epi)}, {"test_object", to_json(x)}});
  }
}

void suite_mono(Ctx& c) {
  Morphism f = random_test_morphism(c.q, c.field, c.rng);
  CriterionReport r = is_stable_mono(f);
  c.check(!has_oracle(*c.q) || r.method == Method::Both, "oracle consulted", inst(f));
  if (f.is_injective()) c.check(r.verdict, "injective maps are stable monos", inst(f));
}

void suite_epi(Ctx& c) {
  Morphism f = random_module_epi(c.q, c.field, c.rng);
  CriterionReport r = is_stable_epi(f);
  std::vector<Morphism> hs = projective_test_maps(f.source());
  const Representation lambda = regular(c.q, c.field);
  for (int k = 0; k < 2; ++k) hs.push_back(random_morphism(f.source(), lambda, c.rng));
  bool all_lift = true;
  for (const auto& h : hs) all_lift = all_lift && pushout_lift(f, h).has_value();
  c.check(all_lift == r.verdict, "pushout lifts exist iff stable epi", inst(f));
  if (!r.verdict && has_oracle(*c.q)) {
    EpiWitness w = epi_witness(f);
    c.check(is_projective(w.h.target()) && !pushout_lift(f, w.h).has_value(),
            "epi witness fails to lift", inst(f));
  }
  // Between stable modules a stable epi is exactly a surjection.
  Representation a = stable_part(c.rep());
  Representation b = stable_part(c.rep());
  Morphism g = random_morphism(a, b, c.rng);
  c.check(is_stable_epi(g).verdict == g.is_surjective(),
          "between stable modules: stable epi iff surjective", inst(g));
  Morphism p = quotient(random_generated_subrep(a, c.rng)).projection;
  if (is_stable_module(p.target()))
    c.check(is_stable_epi(p).verdict, "surjection between stable modules is epi", inst(p));
}

void suite_splitepi(Ctx& c) {
  Morphism f = random_test_morphism(c.q, c.field, c.rng);
  CriterionReport r = is_stable_split_epi(f);
  c.check(r.definitional.has_value() && *r.definitional == r.verdict,
          "definitional split-epi test recorded", inst(f));
  Representation m = c.rep();
  Morphism u = as_representation(random_generated_subrep(m, c.rng)).inclusion;
  const bool e = is_stable_epi(u).verdict;
  const bool s = is_stable_split_epi(u).verdict;
  const bool i = is_stable_iso(u).verdict;
  c.check(e == s && s == i, "injective map: epi, split epi and iso coincide", inst(u));
}

void suite_iso(Ctx& c) {
  Morphism f = random_test_morphism(c.q, c.field, c.rng);
  CriterionReport r = is_stable_iso(f);
  if (r.verdict)
    c.check(r.witness.has_value() && r.witness->kind == "inverse",
            "stable iso carries an inverse", inst(f));
  Morphism g = random_morphism(f.target(), c.rep(), c.rng);
  const Morphism gf = compose(g, f);
  if (is_stable_mono(f).verdict && is_stable_mono(g).verdict)
    c.check(is_stable_mono(gf).verdict, "mono composed with mono is mono", inst(gf));
  if (is_stable_epi(f).verdict && is_stable_epi(g).verdict)
    c.check(is_stable_epi(gf).verdict, "epi composed with epi is epi", inst(gf));
  if (r.verdict && is_stable_iso(g).verdict)
    c.check(is_stable_iso(gf).verdict, "iso composed with iso is iso", inst(gf));
  // Isos built by adding projective summands compose to isos.
  Representation k = c.rep();
  Morphism i1 = direct_sum(k, random_projective(c.q, c.field, c.rng)).injections[0];
  Morphism i2 =
      direct_sum(i1.target(), random_projective(c.q, c.field, c.rng)).injections[0];
  c.check(is_stable_iso(compose(i2, i1)).verdict, "composite of split isos is iso",
          inst(compose(i2, i1)));
}

void suite_torsion(Ctx& c) {
  Representation m = c.rep();
  TorsionSplit ts = canonical_split(m);
  Representation n = c.rep();
  Morphism f = random_morphism(m, n, c.rng);
  if (is_stably_zero(f).verdict)
    c.check(compose(f, ts.torsion_part.inclusion).is_zero(),
            "stably zero maps vanish on the torsion submodule", inst(f));
  if (auto p = torsion_quotient(m, c.rng))
    c.check(is_stable_epi(*p).verdict, "kernel inside torsion gives an epi", inst(*p));
  c.check(is_stable_epi(ts.projection).verdict, "sharp projection is epi", inst(m));
  c.check(is_stable_iso(ts.torsion_part.inclusion).verdict, "torsion inclusion is iso",
          inst(m));
  for (const Morphism& g : {f, random_test_morphism(c.q, c.field, c.rng)}) {
    if (is_stable_epi(g).verdict) {
      c.check(is_stable_epi(sharp_map(g)).verdict, "sharp of an epi is epi", inst(g));
      c.check(contains(image(g), torsion_submodule(g.target())),
              "image of an epi contains the target torsion", inst(g));
    }
    if (is_stable_epi(sharp_map(g)).verdict && torsion_map(g).is_surjective())
      c.check(is_stable_epi(g).verdict, "epi sharp part and onto torsion part give epi",
              inst(g));
  }
  Representation pr = random_projective(c.q, c.field, c.rng);
  Representation sub = as_representation(random_generated_subrep(pr, c.rng)).object;
  c.check(is_projective(sub), "submodule of a projective is projective", inst(sub));
  Morphism h = random_morphism(sub, c.rep(), c.rng);
  if (is_stable_epi(h).verdict)
    c.check(is_stable_split_epi(h).verdict, "epi out of a projective submodule splits",
            inst(h));
}

void suite_reflector(Ctx& c) {
  Representation m = c.rep();
  Representation t = c.rng.coin() ? random_projective(c.q, c.field, c.rng)
                                  : sharp(c.rep()).object;
  Quotient sh = sharp(m);
  HomSpace hs(sh.object, t), hm(m, t);
  Matrix pre(c.field, hm.dim(), hs.dim());
  for (std::size_t k = 0; k < hs.dim(); ++k) {
    Vector x = hm.coordinates(compose(hs.element(k), sh.projection));
    for (std::size_t r = 0; r < x.size(); ++r) pre(r, k) = x[r];
  }
  c.check(hs.dim() == hm.dim() && injective_matrix(pre),
          "precomposition with the sharp projection is bijective on homs", inst(m));
  StableHom ss(sh.object, t), sm(m, t);
  c.check(ss.quotient_dim() == sm.quotient_dim() &&
              injective_matrix(precompose_matrix(sh.projection, ss, sm)),
          "precomposition with the sharp projection is bijective on stable homs",
          inst(m));
}

void suite_normalmono(Ctx& c) {
  Morphism f = random_stable_mono(c);
  if (c.is_abelian()) {
    NormalMonoCertificate cert = normal_mono_certificate(f);
    c.check(cert.validated.value_or(true), "certificate validates", inst(f));
    return;
  }
  bool refused = false;
  try {
    normal_mono_certificate(f);
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::NotAbelianCase;
  }
  c.check(refused, "certificate refused outside the abelian case", inst(f));
  if (c.first_visit()) {
    NonNormalMono w = non_normal_mono_witness(c.q, c.field);
    c.check(is_stable_mono(w.p).verdict, "non-normal witness is a mono", inst(w.p));
  }
}

void check_weak_kernel(Ctx& c, const Morphism& f, const Morphism& k,
                       const Representation& x) {
  StableHom xa(x, f.source()), xb(x, f.target());
  HomSpace xk(x, k.source());
  Matrix pm = postcompose_matrix(f, xa, xb);
  Matrix kb = kernel_basis(pm);
  for (std::size_t j = 0; j < kb.cols(); ++j) {
    Morphism g = xa.lift_class(kb.column_vector(j));
    Matrix cols(c.field, xa.quotient_dim(), xk.dim());
    for (std::size_t i = 0; i < xk.dim(); ++i) {
      Vector v = xa.project(compose(k, xk.element(i)));
      for (std::size_t r = 0; r < v.size(); ++r) cols(r, i) = v[r];
    }
    c.check(solve(cols, Matrix::column(c.field, xa.project(g))).has_value(),
            "maps killed by f factor through its kernel",
            {{"morphism", to_json(f)}, {"test_map", to_json(g)}});
  }
}

void suite_normalepi(Ctx& c) {
  Morphism f = random_stable_epi(c);
  CriterionReport r = is_normal_epi(f);
  SES s = ses_of_epi(f);
  const Representation& k = s.left();
  for (int t = 0; t < 2; ++t) {
    Representation p = projective(c.q, c.field, c.rng.below(c.q->vertex_count()));
    if (c.rng.coin())
      p = direct_sum(p, projective(c.q, c.field, c.rng.below(c.q->vertex_count()))).object;
    Morphism alpha = random_morphism(k, p, c.rng);
    const bool splits = sequence_splits(alpha_pushout(s, alpha).result).has_value();
    if (r.verdict)
      c.check(splits, "random alpha splits when every basis alpha does",
              {{"morphism", to_json(f)}, {"alpha", to_json(alpha)}});
  }
  if (is_stable_module(f.source()))
    c.check(r.verdict == is_stable_module(k),
            "stable source: normal iff the kernel is stable", inst(f));
  if (has_oracle(*c.q)) {
    auto objs = oracle_objects(f.source());
    if (!objs.empty()) check_weak_kernel(c, f, s.mono, objs[c.rng.below(objs.size())]);
  }
  check_weak_kernel(c, f, s.mono, c.rep());
}

void suite_conormal(Ctx& c) {
  if (!c.is_abelian()) return;
  Morphism f = random_stable_epi(c);
  c.check(is_normal_epi(f).verdict, "stable epi is normal in the abelian case", inst(f));
}

void suite_witness(Ctx& c) {
  if (c.first_visit()) {
    Verdict v = classify(c.q, c.field);
    auto one = stable_envelope_procedure(c.q, c.field);
    auto iter = stable_envelope_iterative(c.q, c.field);
    if (v.abelian) {
      c.check(!one && !iter, "no stable envelope in the abelian case");
      bool none = false;
      try {
        bimorphism_witness(c.q, c.field);
      } catch (const Error& e) {
        none = e.kind() == ErrorKind::NoneExists;
      }
      c.check(none, "no bimorphism witness in the abelian case");
    } else {
      c.check(one && iter && one->projective.dims() == iter->projective.dims() &&
                  one->injective.dims() == iter->injective.dims(),
              "one-step and iterative envelopes agree");
      c.check(one && !one->projective.is_zero() && is_projective(one->projective) &&
                  is_stable_module(one->injective),
              "nonzero projective with stable envelope");
      BimorphismWitness w = bimorphism_witness(c.q, c.field);
      c.check(w.mono && w.epi && !w.iso, "bimorphism flags", inst(w.p));
      if (has_oracle(*c.q))
        c.check(v.epi_mono_factorization == std::optional<bool>(false),
                "factorization-system failure reported");
    }
  }
  // A nonzero projective submodule of a stable module gives a bimorphism
  // that is not a split mono.
  Representation a = stable_part(c.rep());
  SubRep u = random_generated_subrep(a, c.rng);
  Embedded ue = as_representation(u);
  if (u.is_zero() || !is_projective(ue.object)) return;
  Morphism p = quotient(u).projection;
  c.check(is_stable_mono(p).verdict && is_stable_epi(p).verdict &&
              !is_stable_split_mono(p).verdict,
          "quotient of a stable module by a projective is a non-split bimorphism",
          inst(p));
}

void suite_quotient(Ctx& c) {
  if (c.first_visit()) {
    if (c.q->arrow_count() > 0) {
      const std::size_t s = c.q->arrow(0).source;
      Morphism pi = top(projective(c.q, c.field, s)).projection;
      const bool epi = is_stable_epi(pi).verdict;
      c.check(!epi, "projective onto its top is not a stable epi", inst(pi));
      if (!epi)
        c.finding("module epimorphism that is not a stable epimorphism", inst(pi));
    }
  }
  if (c.q->arrow_count() == 0) {
    Morphism f = random_module_epi(c.q, c.field, c.rng);
    c.check(is_stable_epi(f).verdict, "semisimple: every epi stays epi", inst(f));
  }
  Representation a = c.rep(), a2 = c.rep(), b = c.rep();
  Representation sum = direct_sum(a, a2).object;
  c.check(StableHom(sum, b).quotient_dim() ==
              StableHom(a, b).quotient_dim() + StableHom(a2, b).quotient_dim(),
          "stable homs are additive in the source", inst(sum));
  c.check(StableHom(b, sum).quotient_dim() ==
              StableHom(b, a).quotient_dim() + StableHom(b, a2).quotient_dim(),
          "stable homs are additive in the target", inst(sum));
  Representation p1 = random_projective(c.q, c.field, c.rng);
  Representation p2 = random_projective(c.q, c.field, c.rng);
  c.check(is_projective(direct_sum(p1, p2).object), "finite sums of projectives are projective");
}

using Body = void (*)(Ctx&);

const std::vector<std::pair<std::string, Body>>& registry() {
  static const std::vector<std::pair<std::string, Body>> r = {
      {"S-split", suite_split},           {"S-halfexact", suite_halfexact},
      {"S-mono", suite_mono},             {"S-epi", suite_epi},
      {"S-splitepi", suite_splitepi},     {"S-iso", suite_iso},
      {"S-torsion", suite_torsion},       {"S-reflector", suite_reflector},
      {"S-normalmono", suite_normalmono}, {"S-normalepi", suite_normalepi},
      {"S-conormal", suite_conormal},     {"S-witness", suite_witness},
      {"S-quotient", suite_quotient},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, _] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, std::size_t trials,
                      std::uint64_t seed, PrimeField field,
                      std::vector<QuiverPtr> quivers) {
  Body body = nullptr;
  for (const auto& [n, b] : registry())
    if (n == name) body = b;
  require(body != nullptr, ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
  if (quivers.empty())
    for (const auto& o : an_orientations(3)) quivers.push_back(share(an_quiver(3, o)));

  Ctx c(field, seed);
  c.report.suite = name;
  c.report.trials = trials;
  c.report.seed = seed;
  c.report.field = field.modulus();
  for (const auto& q : quivers) c.report.quivers.push_back(quiver_label(*q));

  for (std::size_t t = 0; t < trials; ++t) {
    c.trial = t;
    c.qi = t % quivers.size();
    c.q = quivers[c.qi];
    try {
      body(c);
    } catch (const Error& e) {
      ++c.report.checks;
      c.report.failures.push_back({{"trial", t},
                                   {"quiver", quiver_label(*c.q)},
                                   {"check", "no error raised"},
                                   {"error", to_string(e.kind())},
                                   {"message", e.what()}});
    }
  }
  c.report.passed = c.report.failures.empty();
  return c.report;
}

}  // namespace stabcat
