#pragma once

// Top-level classification of a path algebra (is its stable category
// abelian?), the census over A_n orientations, the comparison of the stable
// category of equioriented A_n with modules over A_{n-1}, and the seeded
// property suites.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabcat/normality.hpp"
#include "stabcat/rep.hpp"

namespace stabcat {

using Json = nlohmann::ordered_json;

struct Verdict {
  QuiverPtr quiver;
  PrimeField field;
  std::optional<std::string> orientation;  // A_n inputs only
  Representation envelope_of_ring;
  bool envelope_projective = false;
  bool envelope_stably_zero = false;  // second route, must agree
  bool abelian = false;
  std::vector<std::string> reasons;
  std::optional<StableEnvelope> stable_envelope;
  std::optional<BimorphismWitness> witness;
  /// Whether (Epi, Mono) is a factorization system; false when a
  /// bimorphism witness exists.
  std::optional<bool> epi_mono_factorization;
};

/// Throws OracleMismatch if the two envelope computations or the A_n
/// orientation pattern disagree with the verdict.
Verdict classify(const QuiverPtr& q, PrimeField field);

struct CensusRow {
  std::string orientation;
  bool monotone = false;
  Verdict verdict;
};

std::vector<CensusRow> census(std::size_t n, PrimeField field);

struct EquivalenceReport {
  std::size_t n = 0;
  std::vector<std::string> stable_objects;  // non-projective intervals of A_n
  std::vector<std::string> target_objects;  // intervals of A_{n-1}
  std::vector<std::vector<std::size_t>> stable_table;  // stable hom dims
  std::vector<std::vector<std::size_t>> target_table;  // hom dims
  std::size_t expected_count = 0;                      // n(n-1)/2
  bool counts_match = false;
  std::optional<std::vector<std::size_t>> bijection;  // stable -> target
};

/// 2 <= n <= 5, equioriented.  Throws InvalidInput otherwise.
EquivalenceReport equivalence_table(std::size_t n, PrimeField field);

/// Label "M[lo..hi]" (1-based) of an interval module.
std::string interval_label(std::size_t lo, std::size_t hi);

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint32_t field = 0;
  std::vector<std::string> quivers;
  std::size_t checks = 0;
  std::vector<Json> failures;
  std::vector<Json> findings;  // expected counterexamples, not failures
  bool passed = true;
};

const std::vector<std::string>& suite_names();

/// Trials cycle through `quivers`; the default is every orientation of A_3.
/// Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, std::size_t trials,
                      std::uint64_t seed, PrimeField field,
                      std::vector<QuiverPtr> quivers = {});

}  // namespace stabcat
