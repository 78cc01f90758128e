#pragma once

// Helpers and independent oracles shared by the unit tests and the
// acceptance binary.  The oracles avoid the library's solvers: they count
// morphisms by brute force or rebuild quantities from a different
// construction.

#include <cstdint>
#include <string>
#include <vector>

#include "stabcat/error.hpp"
#include "stabcat/json_io.hpp"
#include "stabcat/normality.hpp"
#include "stabcat/sampling.hpp"
#include "stabcat/stablecat.hpp"
#include "stabcat/torsion.hpp"
#include "stabcat/verdict.hpp"

namespace testing {

using namespace stabcat;

inline QuiverPtr an(std::size_t n, const std::string& orientation) {
  return share(an_quiver(n, orientation));
}

inline QuiverPtr equioriented(std::size_t n) { return an(n, std::string(n - 1, '>')); }

inline QuiverPtr kronecker() {
  return share(Quiver(2, {{"a", 0, 1}, {"b", 0, 1}}));
}

inline Matrix mat(PrimeField f, std::vector<std::vector<std::int64_t>> rows) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  return Matrix::from_rows(f, r, c, rows);
}

/// Number of morphisms A -> B found by enumerating every tuple of component
/// matrices; only usable for tiny p and dimensions.
inline std::uint64_t brute_hom_count(const Representation& a, const Representation& b) {
  const std::uint64_t p = a.field().modulus();
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    offset.push_back(total);
    total += a.dim(v) * b.dim(v);
  }
  std::vector<std::uint64_t> x(total, 0);
  auto entry = [&](std::size_t v, std::size_t r, std::size_t c) {
    return x[offset[v] + r * a.dim(v) + c];
  };
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < a.quiver().arrow_count() && ok; ++k) {
      const std::size_t s = a.quiver().arrow(k).source, t = a.quiver().arrow(k).target;
      const Matrix& ma = a.action(k);
      const Matrix& nb = b.action(k);
      // f_t * M_a == N_a * f_s, entry by entry.
      for (std::size_t r = 0; r < b.dim(t) && ok; ++r)
        for (std::size_t c = 0; c < a.dim(s) && ok; ++c) {
          std::uint64_t lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < a.dim(t); ++m) lhs += entry(t, r, m) * ma(m, c);
          for (std::size_t m = 0; m < b.dim(s); ++m) rhs += nb(r, m) * entry(s, m, c);
          ok = lhs % p == rhs % p;
        }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < total && ++x[i] == p) x[i++] = 0;
    if (i == total) break;
  }
  return count;
}

inline std::size_t log_base(std::uint64_t value, std::uint64_t base) {
  std::size_t k = 0;
  while (value > 1) {
    value /= base;
    ++k;
  }
  return k;
}

/// Dimension of the maps A -> B factoring through a projective, as the span
/// of all composites A -> P_i -> B (no projective cover involved).
inline std::size_t trivial_dim_by_spans(const Representation& a, const Representation& b) {
  const QuiverPtr& q = a.quiver_ptr();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < q->vertex_count(); ++i) {
    Representation p = projective(q, a.field(), i);
    auto into = hom_basis(a, p);
    auto out = hom_basis(p, b);
    for (const auto& g : into)
      for (const auto& h : out) rows.push_back(flatten(compose(h, g)));
  }
  if (rows.empty()) return 0;
  Matrix m(a.field(), rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return rank(m);
}

/// Hom dimension between interval modules [a..b] and [c..d] of equioriented
/// A_n (arrows k -> k+1): one exactly when c <= a <= d <= b.
inline std::size_t equioriented_interval_hom(std::size_t a, std::size_t b, std::size_t c,
                                             std::size_t d) {
  return (c <= a && a <= d && d <= b) ? 1 : 0;
}

/// Parses "M[lo..hi]".
inline std::pair<std::size_t, std::size_t> parse_label(const std::string& s) {
  const auto dots = s.find("..");
  return {std::stoul(s.substr(2, dots - 2)), std::stoul(s.substr(dots + 2))};
}

/// Stable epi representatives: surjections whose class is a stable epi.
inline Morphism random_stable_epi(const QuiverPtr& q, PrimeField f, Rng& rng) {
  while (true) {
    Morphism m = random_module_epi(q, f, rng);
    if (is_stable_epi(m).verdict) return m;
  }
}

inline Morphism random_stable_mono(const QuiverPtr& q, PrimeField f, Rng& rng) {
  while (true) {
    Morphism m = random_test_morphism(q, f, rng);
    if (is_stable_mono(m).verdict) return m;
  }
}

}  // namespace testing
