#include "doctest.h"
#include "support.hpp"

using namespace stabcat;
using testing::an;

namespace {

const PrimeField F(101);
using Dims = std::vector<std::size_t>;

// t(M)_v by brute force over a tiny field: vectors killed by every module map
// M -> P_i, with the maps themselves enumerated rather than solved for.
Dims brute_torsion_dims(const Representation& m) {
  const QuiverPtr& q = m.quiver_ptr();
  const std::uint64_t p = m.field().modulus();
  std::vector<Matrix> forms(m.vertex_count());
  for (std::size_t v = 0; v < m.vertex_count(); ++v) forms[v] = Matrix(m.field(), 0, m.dim(v));
  for (std::size_t i = 0; i < q->vertex_count(); ++i) {
    Representation pi = projective(q, m.field(), i);
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
      offset.push_back(total);
      total += m.dim(v) * pi.dim(v);
    }
    std::vector<std::uint64_t> x(total, 0);
    while (true) {
      std::vector<Matrix> comps;
      for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        Matrix c(m.field(), pi.dim(v), m.dim(v));
        for (std::size_t r = 0; r < c.rows(); ++r)
          for (std::size_t k = 0; k < c.cols(); ++k)
            c(r, k) = static_cast<Scalar>(x[offset[v] + r * c.cols() + k]);
        comps.push_back(c);
      }
      bool commutes = true;
      for (std::size_t a = 0; a < q->arrow_count() && commutes; ++a) {
        const auto& arr = q->arrow(a);
        commutes = comps[arr.target] * m.action(a) == pi.action(a) * comps[arr.source];
      }
      if (commutes)
        for (std::size_t v = 0; v < m.vertex_count(); ++v) forms[v] = vstack(forms[v], comps[v]);
      std::size_t k = 0;
      while (k < total && ++x[k] == p) x[k++] = 0;
      if (k == total) break;
    }
  }
  Dims out;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) out.push_back(m.dim(v) - rank(forms[v]));
  return out;
}

void check_split(const Representation& m) {
  TorsionSplit s = canonical_split(m);
  CHECK(is_projective(s.sharp));
  CHECK(compose(s.projection, s.section) == Morphism::identity(s.sharp));
  CHECK(compose(s.retraction, s.torsion_part.inclusion) ==
        Morphism::identity(s.torsion_part.object));
  CHECK(is_stable_module(s.torsion_part.object));
  CHECK(kernel(s.projection) == s.torsion);
}

}  // namespace

TEST_CASE("torsion submodule examples") {
  for (const auto& o : an_orientations(3)) {
    QuiverPtr q = an(3, o);
    for (std::size_t i = 0; i < 3; ++i) CHECK(torsion_submodule(projective(q, F, i)).is_zero());
  }
  QuiverPtr q2 = an(2, ">");
  Representation s1 = simple(q2, F, 0);
  CHECK(torsion_submodule(s1) == full_subrep(s1));

  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    QuiverPtr q = an(3, t % 2 ? "><" : "<<");
    Representation a = random_representation(q, F, rng), b = random_representation(q, F, rng);
    Dims da = torsion_submodule(a).dims(), db = torsion_submodule(b).dims();
    Dims dsum = torsion_submodule(direct_sum(a, b).object).dims();
    for (std::size_t v = 0; v < 3; ++v) CHECK(dsum[v] == da[v] + db[v]);
  }
}

TEST_CASE("torsion agrees with brute-force forms over F_2 and F_3") {
  std::vector<QuiverPtr> qs = {an(2, ">"), an(3, "><"), an(3, "<>"), an(3, ">>")};
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    Rng rng(50 + p);
    int tested = 0;
    for (int t = 0; t < 60 && tested < 20; ++t) {
      QuiverPtr q = qs[t % qs.size()];
      Representation m = random_representation(q, f, rng, 2);
      std::size_t coords = 0;
      for (std::size_t i = 0; i < q->vertex_count(); ++i) {
        Representation pi = projective(q, f, i);
        std::size_t c = 0;
        for (std::size_t v = 0; v < m.vertex_count(); ++v) c += m.dim(v) * pi.dim(v);
        coords = std::max(coords, c);
      }
      if (coords > 10) continue;
      ++tested;
      CHECK(torsion_submodule(m).dims() == brute_torsion_dims(m));
    }
    CHECK(tested >= 10);
  }
}

TEST_CASE("sharp examples") {
  QuiverPtr q = an(2, ">");
  CHECK(sharp(simple(q, F, 0)).object.is_zero());
  Representation p1 = projective(q, F, 0);
  Quotient ps = sharp(p1);
  CHECK(ps.object.dims() == p1.dims());
  CHECK(ps.projection.is_injective());
  CHECK(sharp(Representation::zero(q, F)).object.is_zero());
}

TEST_CASE("canonical split examples") {
  QuiverPtr q = an(2, ">");
  Representation s1 = simple(q, F, 0), p1 = projective(q, F, 0);
  TorsionSplit s = canonical_split(direct_sum(s1, p1).object);
  CHECK(s.torsion.dims() == s1.dims());
  CHECK(s.sharp.dims() == p1.dims());

  TorsionSplit proj = canonical_split(regular(q, F));
  CHECK(proj.torsion.is_zero());
  CHECK(proj.section.is_injective());
  CHECK(proj.section.is_surjective());

  TorsionSplit stable = canonical_split(injective(an(3, "><"), F, 1));
  CHECK(stable.sharp.is_zero());
}

TEST_CASE("stable modules") {
  CHECK(is_stable_module(simple(an(2, ">"), F, 0)));
  for (std::size_t i = 0; i < 3; ++i) CHECK_FALSE(is_stable_module(projective(an(3, "<>"), F, i)));
  QuiverPtr q = an(3, "><");
  Representation i2 = injective(q, F, 1);
  CHECK(is_stable_module(i2));
  for (std::size_t j = 0; j < 3; ++j) CHECK(HomSpace(i2, projective(q, F, j)).dim() == 0);
}

TEST_CASE("canonical split on every interval module, n <= 5") {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& o : an_orientations(n))
      for (const auto& m : an_indecomposables(an(n, o), F)) {
        check_split(m);
        ++count;
      }
  CHECK(count == 1 + 2 * 3 + 4 * 6 + 8 * 10 + 16 * 15);
}

TEST_CASE("canonical split on random modules") {
  Rng rng(77);
  std::vector<QuiverPtr> qs = {an(3, "><"), an(4, "<><"), an(4, ">>>"), testing::kronecker(),
                               share(discrete_quiver(2))};
  for (int t = 0; t < 60; ++t) check_split(random_representation(qs[t % qs.size()], F, rng));
}

TEST_CASE("sharp and torsion functors") {
  Rng rng(8);
  QuiverPtr q = an(3, "<>");
  for (int t = 0; t < 30; ++t) {
    Morphism f = random_test_morphism(q, F, rng);
    Morphism fs = sharp_map(f);
    Quotient sa = sharp(f.source()), sb = sharp(f.target());
    CHECK(compose(fs, sa.projection) == compose(sb.projection, f));
    Morphism tf = torsion_map(f);
    Embedded ta = as_representation(torsion_submodule(f.source()));
    Embedded tb = as_representation(torsion_submodule(f.target()));
    CHECK(compose(tb.inclusion, tf) == compose(f, ta.inclusion));
  }
}
