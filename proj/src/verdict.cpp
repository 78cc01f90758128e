#include "stabcat/verdict.hpp"

#include <algorithm>
#include <tuple>

#include "stabcat/error.hpp"
#include "stabcat/stablecat.hpp"

namespace stabcat {

Verdict classify(const QuiverPtr& q, PrimeField field) {
  Verdict v;
  v.quiver = q;
  v.field = field;
  v.orientation = an_orientation(*q);
  const Representation lambda = regular(q, field);
  v.envelope_of_ring = injective_envelope(lambda).injective;
  v.envelope_projective = is_projective(v.envelope_of_ring);
  v.envelope_stably_zero =
      StableHom(v.envelope_of_ring, v.envelope_of_ring).quotient_dim() == 0;
  require(v.envelope_projective == v.envelope_stably_zero, ErrorKind::OracleMismatch,
          "projectivity test and stable endomorphism test disagree");
  v.abelian = v.envelope_projective;
  v.reasons.push_back(v.envelope_projective
                          ? "injective envelope of the regular module is projective"
                          : "injective envelope of the regular module is not projective");
  if (v.orientation) {
    const bool mono = is_monotone(*v.orientation);
    require(mono == v.abelian, ErrorKind::OracleMismatch,
            "verdict contradicts the orientation pattern");
    v.reasons.push_back(mono ? "orientation is monotone" : "orientation is not monotone");
  }
  if (v.abelian) {
    v.epi_mono_factorization = true;
    return v;
  }
  v.stable_envelope = stable_envelope_procedure(q, field);
  require(v.stable_envelope.has_value(), ErrorKind::InternalAssertion,
          "non-abelian case without a stable envelope");
  v.reasons.push_back("a nonzero projective has a stable injective envelope");
  if (v.orientation) {
    v.witness = bimorphism_witness(q, field);
    v.epi_mono_factorization = false;
    v.reasons.push_back(
        "bimorphism witness is mono and epi but not iso, so (Epi, Mono) is not a "
        "factorization system");
  }
  return v;
}

std::vector<CensusRow> census(std::size_t n, PrimeField field) {
  std::vector<CensusRow> rows;
  for (const auto& o : an_orientations(n))
    rows.push_back({o, is_monotone(o), classify(share(an_quiver(n, o)), field)});
  return rows;
}

std::string interval_label(std::size_t lo, std::size_t hi) {
  return "M[" + std::to_string(lo + 1) + ".." + std::to_string(hi + 1) + "]";
}

namespace {

using Table = std::vector<std::vector<std::size_t>>;
using Signature =
    std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;

Signature signature(const Table& t, std::size_t i) {
  std::vector<std::size_t> row = t[i], col;
  for (const auto& r : t) col.push_back(r[i]);
  std::sort(row.begin(), row.end());
  std::sort(col.begin(), col.end());
  return {t[i][i], row, col};
}

bool extend(const Table& s, const Table& t, const std::vector<std::vector<std::size_t>>& cand,
            std::vector<std::size_t>& map, std::vector<bool>& used, std::size_t i) {
  if (i == s.size()) return true;
  for (std::size_t c : cand[i]) {
    if (used[c]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j)
      ok = s[i][j] == t[c][map[j]] && s[j][i] == t[map[j]][c];
    if (!ok || s[i][i] != t[c][c]) continue;
    map[i] = c;
    used[c] = true;
    if (extend(s, t, cand, map, used, i + 1)) return true;
    used[c] = false;
  }
  return false;
}

}  // namespace

EquivalenceReport equivalence_table(std::size_t n, PrimeField field) {
  require(n >= 2 && n <= 5, ErrorKind::InvalidInput,
          "equivalence table needs 2 <= n <= 5");
  EquivalenceReport r;
  r.n = n;
  r.expected_count = n * (n - 1) / 2;

  auto q = share(an_quiver(n, std::string(n - 1, '>')));
  std::vector<Representation> objs;
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = lo; hi < n; ++hi) {
      Representation x = interval(q, field, lo, hi);
      if (StableHom(x, x).quotient_dim() == 0) continue;
      r.stable_objects.push_back(interval_label(lo, hi));
      objs.push_back(std::move(x));
    }
  for (const auto& a : objs) {
    r.stable_table.emplace_back();
    for (const auto& b : objs) r.stable_table.back().push_back(StableHom(a, b).quotient_dim());
  }

  auto qt = share(an_quiver(n - 1, std::string(n - 2, '>')));
  std::vector<Representation> targets;
  for (std::size_t lo = 0; lo + 1 < n; ++lo)
    for (std::size_t hi = lo; hi + 1 < n; ++hi) {
      r.target_objects.push_back(interval_label(lo, hi));
      targets.push_back(interval(qt, field, lo, hi));
    }
  for (const auto& a : targets) {
    r.target_table.emplace_back();
    for (const auto& b : targets) r.target_table.back().push_back(HomSpace(a, b).dim());
  }

  r.counts_match = objs.size() == r.expected_count && targets.size() == r.expected_count;
  if (objs.size() != targets.size()) return r;

  std::vector<std::vector<std::size_t>> cand(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const Signature si = signature(r.stable_table, i);
    for (std::size_t c = 0; c < targets.size(); ++c)
      if (signature(r.target_table, c) == si) cand[i].push_back(c);
  }
  std::vector<std::size_t> map(objs.size());
  std::vector<bool> used(targets.size(), false);
  if (extend(r.stable_table, r.target_table, cand, map, used, 0)) r.bijection = map;
  return r;
}

}  // namespace stabcat
