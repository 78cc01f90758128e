#pragma once

// JSON encodings.  Vertices are 1-based on the wire.  Matrices are arrays of
// rows with entries in [0, p); the modulus travels in the enclosing
// document's "field" key, never inside the objects themselves.
//
//   quiver          {"vertices": n, "arrows": [{"name", "from", "to"}, ...]}
//   representation  {"quiver": ..., "dims": [...], "matrices": {"a1": [[..]]}}
//   morphism        {"source": ..., "target": ..., "components": [[[..]], ..]}

#include "stabcat/normality.hpp"
#include "stabcat/stablecat.hpp"
#include "stabcat/torsion.hpp"
#include "stabcat/verdict.hpp"

namespace stabcat {

Json to_json(const Matrix& m);
Json to_json(const Quiver& q);
Json to_json(const Representation& m);
Json to_json(const Morphism& f);
Json to_json(const SubRep& s);
Json to_json(const Witness& w);
Json to_json(const CriterionReport& r);
Json to_json(const StableHom& h);
Json to_json(const TorsionSplit& s);
Json to_json(const NormalMonoCertificate& c);
Json to_json(const NonNormalMono& w);
Json to_json(const StableEnvelope& e);
Json to_json(const BimorphismWitness& w);
Json to_json(const Verdict& v);
Json to_json(const CensusRow& r);
Json to_json(const EquivalenceReport& r);
Json to_json(const SuiteReport& r);

/// Parsers throw InvalidInput (or the quiver validation kinds) on malformed
/// documents.  Entries are reduced mod p.
Matrix matrix_from_json(const Json& j, PrimeField field, std::size_t rows,
                        std::size_t cols);
Quiver quiver_from_json(const Json& j);
Representation representation_from_json(const Json& j, PrimeField field);
Morphism morphism_from_json(const Json& j, PrimeField field);

}  // namespace stabcat
