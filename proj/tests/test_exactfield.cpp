#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace stabcat;
using testing::mat;

namespace {

Matrix random_small(PrimeField f, std::mt19937_64& gen, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim(0, max_dim);
  const std::size_t r = dim(gen), c = dim(gen);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = gen() % f.modulus();
  return m;
}

// Number of x in F^cols with m x = 0, by enumeration.
std::uint64_t count_null_vectors(const Matrix& m) {
  const std::uint64_t p = m.field().modulus();
  std::vector<std::uint64_t> x(m.cols(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool zero = true;
    for (std::size_t r = 0; r < m.rows() && zero; ++r) {
      std::uint64_t s = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * x[c];
      zero = s % p == 0;
    }
    if (zero) ++count;
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == p) x[i++] = 0;
    if (i == x.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("field arithmetic and modulus validation") {
  PrimeField f(101);
  for (Scalar a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.reduce(-1) == 100);
  CHECK(f.sub(3, 5) == 99);
  CHECK(f.neg(0) == 0);
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  for (std::uint64_t n = 0; n < 200; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) trial = false;
    CHECK(is_prime(n) == trial);
  }
}

TEST_CASE("rref examples") {
  PrimeField f(101);
  auto id = rref(Matrix::identity(f, 3));
  CHECK(id.reduced == Matrix::identity(f, 3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(id.rank() == 3);

  auto z = rref(Matrix(f, 2, 3));
  CHECK(z.reduced == Matrix(f, 2, 3));
  CHECK(z.pivots.empty());

  auto r = rref(mat(f, {{1, 2}, {2, 4}}));
  CHECK(r.reduced == mat(f, {{1, 2}, {0, 0}}));
  CHECK(r.rank() == 1);
}

TEST_CASE("solve examples") {
  PrimeField f(101);
  Matrix b = mat(f, {{4, 7}, {9, 1}});
  auto s = solve(Matrix::identity(f, 2), b);
  REQUIRE(s.has_value());
  CHECK(s->particular == b);
  CHECK(s->kernel.cols() == 0);

  CHECK_FALSE(solve(Matrix(f, 1, 2), mat(f, {{5}})).has_value());

  auto t = solve(mat(f, {{1, 1}}), mat(f, {{3}}));
  REQUIRE(t.has_value());
  CHECK(t->particular == mat(f, {{3}, {0}}));
  CHECK(Subspace::column_space(t->kernel) == Subspace::column_space(mat(f, {{1}, {100}})));

  CHECK_THROWS_AS(solve(Matrix(f, 2, 2), Matrix(f, 3, 1)), Error);
}

TEST_CASE("subspace examples") {
  PrimeField f(101);
  Subspace e1 = Subspace::row_space(mat(f, {{1, 0}}));
  Subspace e2 = Subspace::row_space(mat(f, {{0, 1}}));
  Subspace v = Subspace::row_space(mat(f, {{1, 2, 3}, {0, 1, 1}}));
  CHECK(intersect(v, v) == v);
  CHECK(intersect(e1, e2).is_zero());
  CHECK(complement(e1) == e2);
  CHECK(sum(e1, e2).is_full());
  CHECK(contains(sum(e1, e2), e1));
  CHECK_FALSE(contains(e1, e2));
}

TEST_CASE("rank-nullity against enumeration over small fields") {
  std::mt19937_64 gen(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 60; ++trial) {
      Matrix m = random_small(f, gen, 4);
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < m.cols() - rank(m); ++i) expected *= p;
      CHECK(count_null_vectors(m) == expected);
    }
  }
}

TEST_CASE("linear algebra properties") {
  std::mt19937_64 gen(11);
  PrimeField f(101);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix m = random_small(f, gen, 5);
    Matrix k = kernel_basis(m);
    CHECK(k.cols() + rank(m) == m.cols());
    CHECK((m * k).is_zero());
    CHECK(rank(m) == rank(m.transpose()));
    auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);

    // Consistent right-hand sides are solved exactly.
    Matrix x(f, m.cols(), 2);
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < 2; ++j) x(i, j) = gen() % 101;
    Matrix b = m * x;
    auto s = solve(m, b);
    REQUIRE(s.has_value());
    CHECK(m * s->particular == b);
    CHECK((m * s->kernel).is_zero());

    // Subspace bookkeeping.
    Subspace v = Subspace::column_space(m);
    Subspace w = Subspace::column_space(random_small(f, gen, 5));
    if (w.ambient_dim() == v.ambient_dim()) {
      CHECK(sum(v, w).dim() + intersect(v, w).dim() == v.dim() + w.dim());
      CHECK(sum(v, complement(v)).is_full());
      CHECK(intersect(v, complement(v)).is_zero());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Vector col = m.column_vector(c);
      CHECK(v.contains(col));
      CHECK(v.quotient_coordinates(col) == Vector(v.ambient_dim() - v.dim(), 0));
    }
  }
}

TEST_CASE("image and preimage") {
  PrimeField f(101);
  Matrix m = mat(f, {{1, 0, 1}, {0, 1, 1}});
  Subspace all = Subspace::full(f, 3);
  CHECK(image(m, all).is_full());
  CHECK(kernel(m).dim() == 1);
  CHECK(preimage(m, Subspace(f, 2)) == kernel(m));
  CHECK(column_image(m) == image(m, all));
}
