#include "doctest.h"
#include "support.hpp"

using namespace stabcat;
using testing::an;

namespace {

const PrimeField F(101);
using Dims = std::vector<std::size_t>;

Morphism socle_quotient_i2() {
  Representation i2 = injective(an(3, "><"), F, 1);
  return cokernel(as_representation(socle(i2)).inclusion).projection;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalAssertion;  // sentinel: nothing thrown
}

}  // namespace

TEST_CASE("alpha pushouts") {
  Morphism p = socle_quotient_i2();
  SES ses = ses_of_epi(p);
  REQUIRE(ses.left().dims() == Dims{0, 1, 0});

  Representation p2 = projective(an(3, "><"), F, 1);
  Morphism zero = Morphism::zero(ses.left(), p2);
  PushoutSequence z = alpha_pushout(ses, zero);
  CHECK(z.result.middle().total_dim() == p2.total_dim() + ses.right().total_dim());
  CHECK(sequence_splits(z.result).has_value());

  // The kernel S_2 equals P_2; pushing out along the identity returns the
  // same non-split sequence.
  REQUIRE(ses.left() == p2);
  PushoutSequence id = alpha_pushout(ses, Morphism::identity(p2));
  CHECK(id.result.middle().dims() == Dims{1, 1, 1});
  CHECK_FALSE(sequence_splits(id.result).has_value());
  CHECK_FALSE(sequence_splits(ses).has_value());

  CHECK(kind_of([&] { alpha_pushout(ses, Morphism::identity(p.source())); }) ==
        ErrorKind::DimensionMismatch);
  Representation i2 = p.source();
  CHECK(kind_of([&] {
          alpha_pushout(ses, as_representation(socle(i2)).inclusion);
        }) == ErrorKind::NotProjective);
}

TEST_CASE("split sequences stay split") {
  Rng rng(30);
  QuiverPtr q = an(3, "<>");
  for (int t = 0; t < 20; ++t) {
    Representation a = random_representation(q, F, rng), b = random_representation(q, F, rng);
    DirectSum s = direct_sum(a, b);
    SES ses = make_ses(s.injections[0], s.projections[1]);
    CHECK(sequence_splits(ses).has_value());
    Representation p = random_projective(q, F, rng);
    Morphism alpha = random_morphism(a, p, rng);
    CHECK(sequence_splits(alpha_pushout(ses, alpha).result).has_value());
  }
  QuiverPtr d = share(discrete_quiver(3));
  for (int t = 0; t < 10; ++t) CHECK(sequence_splits(random_ses(d, F, rng)).has_value());
}

TEST_CASE("normal epi examples") {
  QuiverPtr q = an(2, ">");
  Representation s1 = simple(q, F, 0);
  DirectSum ss = direct_sum(s1, s1);
  Morphism add = copair(ss, {Morphism::identity(s1), Morphism::identity(s1)});
  CriterionReport r = is_normal_epi(add);
  CHECK(r.verdict);
  CHECK(r.method == Method::Both);

  CriterionReport bad = is_normal_epi(socle_quotient_i2());
  CHECK_FALSE(bad.verdict);
  CHECK(bad.oracle == std::optional<bool>(false));
  CHECK(bad.witness.has_value());

  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    QuiverPtr q3 = an(3, "><");
    Representation a = random_representation(q3, F, rng), b = random_representation(q3, F, rng);
    DirectSum s = direct_sum(a, b);
    if (!is_stable_epi(s.projections[0]).verdict) continue;
    CHECK(is_normal_epi(s.projections[0]).verdict);
  }

  CHECK(kind_of([&] { is_normal_epi(top(projective(q, F, 0)).projection); }) ==
        ErrorKind::NotEpi);
}

TEST_CASE("normal mono certificates on A_2") {
  QuiverPtr q = an(2, ">");
  Representation p1 = projective(q, F, 0), s1 = simple(q, F, 0), p2 = projective(q, F, 1);
  NormalMonoCertificate c = normal_mono_certificate(top(p1).projection);
  CHECK(c.validated == std::optional<bool>(true));
  CHECK(c.envelope.injective == p1);
  CHECK(c.kernel.object == p2);

  DirectSum sp = direct_sum(s1, p2);
  NormalMonoCertificate d = normal_mono_certificate(sp.projections[0]);
  CHECK(d.validated == std::optional<bool>(true));
  CHECK(d.fprime.is_zero());
  CHECK(d.fprime.source() == s1);

  NormalMonoCertificate e = normal_mono_certificate(Morphism::identity(s1));
  CHECK(e.envelope.injective.is_zero());
  CHECK(e.fprime.target().is_zero());
  CHECK(e.validated == std::optional<bool>(true));
}

TEST_CASE("normal mono preconditions") {
  CHECK(kind_of([] { normal_mono_certificate(socle_quotient_i2()); }) ==
        ErrorKind::NotAbelianCase);
  QuiverPtr q = an(2, ">");
  Representation s1 = simple(q, F, 0);
  CHECK(kind_of([&] { normal_mono_certificate(Morphism::zero(s1, s1)); }) == ErrorKind::NotMono);
}

TEST_CASE("normal monos on monotone orientations") {
  Rng rng(32);
  for (const auto& q : {an(3, ">>"), an(3, "<<"), an(4, ">>>")}) {
    for (int t = 0; t < 15; ++t) {
      Morphism f = testing::random_stable_mono(q, F, rng);
      NormalMonoCertificate c = normal_mono_certificate(f);
      CHECK(c.validated == std::optional<bool>(true));
      CHECK(compose(c.fprime, c.p) == compose(c.cokernel.projection, c.extension));
      CHECK(is_projective(c.envelope.injective));
      CHECK(is_normal_epi(testing::random_stable_epi(q, F, rng)).verdict);
    }
  }
}

TEST_CASE("random alpha combinations never contradict the basis verdict") {
  Rng rng(33);
  for (int t = 0; t < 40; ++t) {
    QuiverPtr q = an(3, t % 2 ? "><" : "<>");
    Morphism f = testing::random_stable_epi(q, F, rng);
    const bool normal = is_normal_epi(f).verdict;
    SES ses = ses_of_epi(f);
    for (int k = 0; k < 3; ++k) {
      Representation p = random_projective(q, F, rng);
      Morphism alpha = random_morphism(ses.left(), p, rng);
      const bool splits = sequence_splits(alpha_pushout(ses, alpha).result).has_value();
      if (normal) CHECK(splits);
    }
  }
}

TEST_CASE("non-normal mono witness") {
  NonNormalMono w = non_normal_mono_witness(an(3, "><"), F);
  CHECK(w.vertex == 1);
  CHECK(w.envelope.injective == injective(an(3, "><"), F, 1));
  CHECK(w.candidates_tested > 0);
  CHECK(is_stable_mono(w.p).verdict);

  CHECK(kind_of([] { non_normal_mono_witness(an(2, ">"), F); }) == ErrorKind::NoneExists);
  CHECK(kind_of([] { non_normal_mono_witness(share(discrete_quiver(2)), F); }) ==
        ErrorKind::NoneExists);
}

TEST_CASE("stable envelopes") {
  QuiverPtr q = an(3, "><");
  auto se = stable_envelope_procedure(q, F);
  REQUIRE(se.has_value());
  CHECK(se->projective.dims() == regular(q, F).dims());
  CHECK(se->injective.dims() == Dims{3, 3, 3});

  CHECK_FALSE(stable_envelope_procedure(an(2, ">"), F).has_value());
  CHECK_FALSE(stable_envelope_procedure(share(discrete_quiver(3)), F).has_value());

  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto& o : an_orientations(n)) {
      QuiverPtr qq = an(n, o);
      auto one = stable_envelope_procedure(qq, F);
      auto it = stable_envelope_iterative(qq, F);
      CHECK(one.has_value() == !is_monotone(o));
      CHECK(it.has_value() == one.has_value());
      if (!one) continue;
      CHECK(one->projective.dims() == it->projective.dims());
      CHECK(one->injective.dims() == it->injective.dims());
      CHECK(is_projective(one->projective));
      CHECK(!one->projective.is_zero());
      CHECK(is_stable_module(one->injective));
      CHECK(is_injective(one->injective));
      CHECK(split_mono(one->inclusion).has_value());
      CHECK(contains(image(one->embedding), socle(one->injective)));
    }
}

TEST_CASE("bimorphism witnesses") {
  BimorphismWitness w = bimorphism_witness(an(3, "><"), F);
  REQUIRE(w.vertex.has_value());
  CHECK(*w.vertex == 1);
  CHECK(w.projective == projective(an(3, "><"), F, 1));
  CHECK(w.mono);
  CHECK(w.epi);
  CHECK_FALSE(w.iso);
  CHECK_FALSE(w.split_mono);

  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(kind_of([n] { bimorphism_witness(testing::equioriented(n), F); }) ==
          ErrorKind::NoneExists);
  CHECK(kind_of([] { bimorphism_witness(share(discrete_quiver(2)), F); }) ==
        ErrorKind::NoneExists);
}
