#pragma once

// Seeded random instances.  The generator is std::mt19937_64 (its output
// sequence is fixed by the standard); ranges are reduced by rejection
// sampling here rather than with std::uniform_int_distribution, whose
// algorithm is implementation-defined.

#include <cstdint>
#include <random>

#include "stabcat/rep.hpp"

namespace stabcat {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return (next() >> 63) != 0; }
  Scalar scalar(const PrimeField& f) { return static_cast<Scalar>(below(f.modulus())); }

 private:
  std::mt19937_64 engine_;
};

Matrix random_matrix(PrimeField f, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_invertible(PrimeField f, std::size_t n, Rng& rng);

/// Either uniform dimensions in [0, max_dim] with uniform matrices, or (on
/// A_n) a direct sum of random interval modules in a random basis.
Representation random_representation(const QuiverPtr& q, PrimeField f, Rng& rng,
                                     std::size_t max_dim = 3);
/// Direct sum of one to three random indecomposable projectives.
Representation random_projective(const QuiverPtr& q, PrimeField f, Rng& rng);
Morphism random_morphism(const Representation& a, const Representation& b, Rng& rng);
/// Submodule generated by one or two random vectors at a random vertex.
SubRep random_generated_subrep(const Representation& m, Rng& rng);
/// U ↪ M ->> M/U with U generated by random vectors.
SES random_ses(const QuiverPtr& q, PrimeField f, Rng& rng);
/// Surjections: quotient maps and epi representatives of random maps.
Morphism random_module_epi(const QuiverPtr& q, PrimeField f, Rng& rng);
/// Mixed morphisms for criteria tests: maps between random modules,
/// quotients, inclusions, endomorphisms, epi representatives and inclusions
/// into a sum with a projective.
Morphism random_test_morphism(const QuiverPtr& q, PrimeField f, Rng& rng);

}  // namespace stabcat
