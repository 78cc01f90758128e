#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace stabcat;
using testing::an;

namespace {

const PrimeField F(101);

}  // namespace

TEST_CASE("classification examples") {
  for (std::size_t n = 1; n <= 5; ++n) {
    Verdict v = classify(testing::equioriented(n), F);
    CHECK(v.abelian);
    CHECK_FALSE(v.witness.has_value());
  }
  Verdict bad = classify(an(3, "><"), F);
  CHECK_FALSE(bad.abelian);
  CHECK(bad.orientation == std::optional<std::string>("><"));
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->mono);
  CHECK(bad.witness->epi);
  CHECK_FALSE(bad.witness->iso);
  CHECK(bad.epi_mono_factorization == std::optional<bool>(false));
  CHECK(bad.envelope_of_ring.dims() == std::vector<std::size_t>{3, 3, 3});
  CHECK_FALSE(bad.reasons.empty());

  Verdict semisimple = classify(share(discrete_quiver(3)), F);
  CHECK(semisimple.abelian);
  CHECK_FALSE(semisimple.orientation.has_value());

  Verdict kron = classify(testing::kronecker(), F);
  CHECK(kron.envelope_projective == kron.abelian);
}

TEST_CASE("census: abelian exactly for monotone orientations") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto rows = census(n, F);
    CHECK(rows.size() == (std::size_t{1} << (n - 1)));
    for (const auto& r : rows) {
      CHECK(r.monotone == is_monotone(r.orientation));
      CHECK(r.verdict.abelian == r.monotone);
      CHECK(r.verdict.envelope_projective == r.verdict.envelope_stably_zero);
      CHECK(r.verdict.abelian == r.verdict.envelope_projective);
      CHECK(r.verdict.witness.has_value() == !r.monotone);
    }
  }
}

TEST_CASE("equivalence tables") {
  EquivalenceReport two = equivalence_table(2, F);
  CHECK(two.stable_objects == std::vector<std::string>{"M[1..1]"});
  CHECK(two.stable_table == std::vector<std::vector<std::size_t>>{{1}});
  CHECK(two.target_table == std::vector<std::vector<std::size_t>>{{1}});

  for (std::size_t n = 2; n <= 5; ++n) {
    EquivalenceReport r = equivalence_table(n, F);
    CHECK(r.expected_count == n * (n - 1) / 2);
    CHECK(r.stable_objects.size() == r.expected_count);
    CHECK(r.counts_match);
    REQUIRE(r.bijection.has_value());

    // Target hom dimensions from the interval formula.
    const std::size_t k = r.target_objects.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        auto [a, b] = testing::parse_label(r.target_objects[i]);
        auto [c, d] = testing::parse_label(r.target_objects[j]);
        CHECK(r.target_table[i][j] == testing::equioriented_interval_hom(a, b, c, d));
      }

    // Stable hom dimensions from spans of composites through projectives.
    QuiverPtr q = testing::equioriented(n);
    std::vector<Representation> objs;
    for (const auto& label : r.stable_objects) {
      auto [lo, hi] = testing::parse_label(label);
      objs.push_back(interval(q, F, lo - 1, hi - 1));
    }
    for (std::size_t i = 0; i < objs.size(); ++i)
      for (std::size_t j = 0; j < objs.size(); ++j)
        CHECK(r.stable_table[i][j] == HomSpace(objs[i], objs[j]).dim() -
                                          testing::trivial_dim_by_spans(objs[i], objs[j]));

    // The bijection carries one table onto the other.
    const auto& bij = *r.bijection;
    std::vector<std::size_t> sorted = bij;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        CHECK(r.stable_table[i][j] == r.target_table[bij[i]][bij[j]]);
  }
  CHECK_THROWS_AS(equivalence_table(1, F), Error);
  CHECK_THROWS_AS(equivalence_table(6, F), Error);
}

TEST_CASE("suites pass and are deterministic") {
  for (const auto& name : suite_names()) {
    SuiteReport a = run_suite(name, 12, 5, F);
    CHECK_MESSAGE(a.passed, name);
    CHECK(a.failures.empty());
    CHECK(a.checks > 0);
    CHECK(a.seed == 5);
    CHECK(a.field == 101);
    SuiteReport b = run_suite(name, 12, 5, F);
    CHECK(to_json(a).dump() == to_json(b).dump());
  }
  CHECK_THROWS_AS(run_suite("S-nothing", 1, 0, F), Error);
}

TEST_CASE("suites on other quivers") {
  for (const auto& name : suite_names()) {
    SuiteReport r = run_suite(name, 6, 9, F, {share(discrete_quiver(2))});
    CHECK_MESSAGE(r.passed, name);
    SuiteReport s = run_suite(name, 6, 9, F, {an(4, "<><"), an(4, ">>>")});
    CHECK_MESSAGE(s.passed, name);
  }
}

TEST_CASE("quotient functor counterexample on A_2") {
  SuiteReport r = run_suite("S-quotient", 1, 0, F, {an(2, ">")});
  CHECK(r.passed);
  REQUIRE_FALSE(r.findings.empty());
  // The finding is the projection of P_1 onto its top, S_1.
  QuiverPtr q = an(2, ">");
  Morphism pi = morphism_from_json(r.findings[0]["instance"]["morphism"], F);
  CHECK(pi == top(projective(q, F, 0)).projection);
  CHECK_FALSE(is_stable_epi(pi).verdict);
}
