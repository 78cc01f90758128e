#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace stabcat;

namespace {

ErrorKind kind_of(std::size_t n, std::vector<Arrow> arrows) {
  try {
    Quiver q(n, std::move(arrows));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalAssertion;  // sentinel: no error
}

// Sum of powers of the adjacency matrix, in plain integers.
PathTable adjacency_paths(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  PathTable adj(n, std::vector<std::size_t>(n, 0)), power(n, std::vector<std::size_t>(n, 0));
  for (const auto& a : q.arrows()) ++adj[a.source][a.target];
  PathTable total(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (std::size_t len = 0; len <= n; ++len) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) total[i][j] += power[i][j];
    PathTable next(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][k] * adj[k][j];
    power = next;
  }
  return total;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(Quiver(2, {{"a", 0, 1}}));
  CHECK(kind_of(1, {{"a", 0, 0}}) == ErrorKind::Cyclic);
  CHECK(kind_of(2, {{"a", 0, 1}, {"b", 1, 0}}) == ErrorKind::Cyclic);
  CHECK(kind_of(2, {{"a", 0, 2}}) == ErrorKind::DanglingEndpoint);
  CHECK(kind_of(3, {{"a", 0, 1}, {"a", 1, 2}}) == ErrorKind::DuplicateArrowName);
  CHECK(Quiver::validate(2, {{"a", 0, 1}, {"a", 1, 0}}).size() == 2);
}

TEST_CASE("A_n generator") {
  Quiver q2 = an_quiver(2, ">");
  REQUIRE(q2.arrow_count() == 1);
  CHECK(q2.arrow(0) == Arrow{"a1", 0, 1});

  Quiver q3 = an_quiver(3, "><");
  REQUIRE(q3.arrow_count() == 2);
  CHECK(q3.arrow(0) == Arrow{"a1", 0, 1});
  CHECK(q3.arrow(1) == Arrow{"a2", 2, 1});

  Quiver q1 = an_quiver(1, "");
  CHECK(q1.vertex_count() == 1);
  CHECK(q1.arrow_count() == 0);

  CHECK_THROWS_AS(an_quiver(3, ">"), Error);
  CHECK_THROWS_AS(an_quiver(3, ">x"), Error);
}

TEST_CASE("path tables") {
  CHECK(path_table(an_quiver(2, ">")) == PathTable{{1, 1}, {0, 1}});
  CHECK(path_table(discrete_quiver(3)) == PathTable{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  PathTable t = path_table(an_quiver(3, "><"));
  CHECK(t[0][1] == 1);
  CHECK(t[1][1] == 1);
  CHECK(t[2][1] == 1);
  // Kronecker quiver: two parallel arrows.
  CHECK(path_table(*testing::kronecker()) == PathTable{{1, 2}, {0, 1}});
}

TEST_CASE("path tables agree with adjacency powers") {
  std::vector<Quiver> quivers = {*testing::kronecker(), discrete_quiver(2),
                                 Quiver(4, {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3},
                                            {"d", 2, 3}, {"e", 0, 3}})};
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& o : an_orientations(n)) quivers.push_back(an_quiver(n, o));
  for (const auto& q : quivers) {
    CHECK(path_table(q) == adjacency_paths(q));
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
      for (std::size_t j = 0; j < q.vertex_count(); ++j)
        for (std::size_t k = 0; k < q.paths(i, j).size(); ++k)
          CHECK(q.path_index(i, j, q.paths(i, j)[k]) == k);
  }
}

TEST_CASE("orientations and topological order") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto os = an_orientations(n);
    CHECK(os.size() == (std::size_t{1} << (n - 1)));
    CHECK(std::is_sorted(os.begin(), os.end()));
    std::size_t monotone = 0;
    for (const auto& o : os) {
      Quiver q = an_quiver(n, o);
      CHECK(an_orientation(q) == o);
      CHECK(q.is_connected());
      std::vector<std::size_t> pos(n);
      for (std::size_t k = 0; k < n; ++k) pos[q.topological_order()[k]] = k;
      for (const auto& a : q.arrows()) CHECK(pos[a.source] < pos[a.target]);
      if (is_monotone(o)) ++monotone;
    }
    CHECK(monotone == (n <= 2 ? os.size() : 2));
  }
  CHECK_FALSE(an_orientation(*testing::kronecker()).has_value());
  CHECK_FALSE(discrete_quiver(2).is_connected());
}
