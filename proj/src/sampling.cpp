#include "stabcat/sampling.hpp"

#include <limits>

#include "stabcat/error.hpp"
#include "stabcat/stablecat.hpp"

namespace stabcat {

std::uint64_t Rng::below(std::uint64_t n) {
  require(n > 0, ErrorKind::InvalidInput, "empty sampling range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % n;
}

Matrix random_matrix(PrimeField f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.scalar(f);
  return m;
}

Matrix random_invertible(PrimeField f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

Representation random_representation(const QuiverPtr& q, PrimeField f, Rng& rng,
                                     std::size_t max_dim) {
  const std::size_t n = q->vertex_count();
  if (has_oracle(*q) && rng.coin()) {
    std::vector<Representation> parts;
    const std::size_t count = 1 + rng.below(3);
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t lo = rng.below(n), hi = rng.below(n);
      if (lo > hi) std::swap(lo, hi);
      parts.push_back(interval(q, f, lo, hi));
    }
    Representation sum = direct_sum(parts).object;
    std::vector<Matrix> g, ginv;
    for (std::size_t v = 0; v < n; ++v) {
      g.push_back(random_invertible(f, sum.dim(v), rng));
      ginv.push_back(solve(g.back(), Matrix::identity(f, sum.dim(v)))->particular);
    }
    std::vector<Matrix> action;
    for (std::size_t a = 0; a < q->arrow_count(); ++a) {
      const Arrow& ar = q->arrow(a);
      action.push_back(g[ar.target] * sum.action(a) * ginv[ar.source]);
    }
    return Representation(q, f, sum.dims(), std::move(action));
  }
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < n; ++v) dims.push_back(rng.below(max_dim + 1));
  std::vector<Matrix> action;
  for (const auto& ar : q->arrows())
    action.push_back(random_matrix(f, dims[ar.target], dims[ar.source], rng));
  return Representation(q, f, std::move(dims), std::move(action));
}

Representation random_projective(const QuiverPtr& q, PrimeField f, Rng& rng) {
  std::vector<Representation> parts;
  const std::size_t count = 1 + rng.below(3);
  for (std::size_t k = 0; k < count; ++k)
    parts.push_back(projective(q, f, rng.below(q->vertex_count())));
  return direct_sum(parts).object;
}

Morphism random_morphism(const Representation& a, const Representation& b, Rng& rng) {
  HomSpace hom(a, b);
  Vector c(hom.dim());
  for (auto& x : c) x = rng.scalar(a.field());
  return hom.combination(c);
}

SubRep random_generated_subrep(const Representation& m, Rng& rng) {
  std::vector<std::size_t> live;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (m.dim(v) > 0) live.push_back(v);
  if (live.empty()) return zero_subrep(m);
  const std::size_t v = live[rng.below(live.size())];
  std::vector<Vector> gens(1 + rng.below(2));
  for (auto& g : gens) {
    g.resize(m.dim(v));
    for (auto& x : g) x = rng.scalar(m.field());
  }
  return generated_subrep(m, v, gens);
}

SES random_ses(const QuiverPtr& q, PrimeField f, Rng& rng) {
  Representation m = random_representation(q, f, rng);
  SubRep u = random_generated_subrep(m, rng);
  Embedded e = as_representation(u);
  Quotient c = quotient(u);
  return make_ses(e.inclusion, c.projection);
}

Morphism random_module_epi(const QuiverPtr& q, PrimeField f, Rng& rng) {
  if (rng.coin()) {
    Representation m = random_representation(q, f, rng);
    return quotient(random_generated_subrep(m, rng)).projection;
  }
  Representation a = random_representation(q, f, rng);
  Representation b = random_representation(q, f, rng);
  return epi_representative(random_morphism(a, b, rng)).map;
}

Morphism random_test_morphism(const QuiverPtr& q, PrimeField f, Rng& rng) {
  switch (rng.below(6)) {
    case 0: {
      Representation a = random_representation(q, f, rng);
      Representation b = random_representation(q, f, rng);
      return random_morphism(a, b, rng);
    }
    case 1: {
      Representation m = random_representation(q, f, rng);
      return quotient(random_generated_subrep(m, rng)).projection;
    }
    case 2: {
      Representation m = random_representation(q, f, rng);
      return as_representation(random_generated_subrep(m, rng)).inclusion;
    }
    case 3: {
      Representation m = random_representation(q, f, rng);
      return random_morphism(m, m, rng);
    }
    case 4: {
      Representation a = random_representation(q, f, rng);
      Representation b = random_representation(q, f, rng);
      return epi_representative(random_morphism(a, b, rng)).map;
    }
    default: {
      Representation k = random_representation(q, f, rng);
      Representation p = random_projective(q, f, rng);
      return direct_sum(k, p).injections[0];
    }
  }
}

}  // namespace stabcat
