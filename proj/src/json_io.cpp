#include "stabcat/json_io.hpp"

#include "stabcat/error.hpp"

namespace stabcat {

namespace {

Json dims_json(const std::vector<std::size_t>& d) { return Json(d); }

const Json& field_of(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorKind::InvalidInput,
          std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t count_of(const Json& j, const char* what) {
  require(j.is_number_integer() && j.get<std::int64_t>() >= 0,
          ErrorKind::InvalidInput, std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

// ------------------------------------------------------------ encoders

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(Json(std::vector<Scalar>(row.begin(), row.end())));
  }
  return rows;
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"name", a.name}, {"from", a.source + 1}, {"to", a.target + 1}});
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

Json to_json(const Representation& m) {
  Json mats = Json::object();
  for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a)
    mats[m.quiver().arrow(a).name] = to_json(m.action(a));
  return {{"quiver", to_json(m.quiver())}, {"dims", dims_json(m.dims())},
          {"matrices", mats}};
}

Json to_json(const Morphism& f) {
  Json comps = Json::array();
  for (const auto& c : f.components()) comps.push_back(to_json(c));
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())},
          {"components", comps}};
}

Json to_json(const SubRep& s) {
  Json bases = Json::array();
  for (const auto& sp : s.spaces) bases.push_back(to_json(sp.basis()));
  return {{"parent", to_json(s.parent)}, {"dims", dims_json(s.dims())}, {"bases", bases}};
}

Json to_json(const Witness& w) {
  Json maps = Json::object(), objects = Json::object();
  for (const auto& [name, f] : w.maps) maps[name] = to_json(f);
  for (const auto& [name, m] : w.objects) objects[name] = to_json(m);
  return {{"kind", w.kind}, {"maps", maps}, {"objects", objects}};
}

Json to_json(const CriterionReport& r) {
  Json j = {{"verdict", r.verdict}, {"method", to_string(r.method)}};
  if (r.fast_path) j["fast_path"] = *r.fast_path;
  if (r.oracle) j["oracle"] = *r.oracle;
  if (r.definitional) j["definitional"] = *r.definitional;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

Json to_json(const StableHom& h) {
  Json reps = Json::array();
  for (const auto& g : h.representatives()) reps.push_back(to_json(g));
  return {{"source", to_json(h.source())},
          {"target", to_json(h.target())},
          {"hom_dim", h.hom_dim()},
          {"trivial_dim", h.trivial().dim()},
          {"quotient_dim", h.quotient_dim()},
          {"trivial_basis", to_json(h.trivial().basis())},
          {"representatives", reps}};
}

Json to_json(const TorsionSplit& s) {
  return {{"module", to_json(s.module)},
          {"torsion", to_json(s.torsion)},
          {"torsion_module", to_json(s.torsion_part.object)},
          {"sharp", to_json(s.sharp)},
          {"projection", to_json(s.projection)},
          {"section", to_json(s.section)}};
}

Json to_json(const NormalMonoCertificate& c) {
  Json j = {{"p", to_json(c.p)},
            {"kernel", to_json(c.kernel.object)},
            {"injective", to_json(c.envelope.injective)},
            {"extension", to_json(c.extension)},
            {"fprime", to_json(c.fprime)}};
  j["validated"] = c.validated ? Json(*c.validated) : Json(nullptr);
  return j;
}

Json to_json(const NonNormalMono& w) {
  return {{"vertex", w.vertex + 1},
          {"projective", to_json(w.envelope.map.source())},
          {"injective", to_json(w.envelope.injective)},
          {"p", to_json(w.p)},
          {"candidates_tested", w.candidates_tested},
          {"proved_non_normal", w.proved_non_normal}};
}

Json to_json(const StableEnvelope& e) {
  return {{"projective", to_json(e.projective)},
          {"projective_dims", dims_json(e.projective.dims())},
          {"injective", to_json(e.injective)},
          {"injective_dims", dims_json(e.injective.dims())},
          {"embedding", to_json(e.embedding)}};
}

Json to_json(const BimorphismWitness& w) {
  Json j = Json::object();
  j["vertex"] = w.vertex ? Json(*w.vertex + 1) : Json(nullptr);
  j["projective"] = to_json(w.projective);
  j["injective"] = to_json(w.injective);
  j["p"] = to_json(w.p);
  j["flags"] = {{"mono", w.mono}, {"epi", w.epi}, {"iso", w.iso},
                {"split_mono", w.split_mono}};
  return j;
}

Json to_json(const Verdict& v) {
  Json j = Json::object();
  j["quiver"] = to_json(*v.quiver);
  j["orientation"] = v.orientation ? Json(*v.orientation) : Json(nullptr);
  j["abelian"] = v.abelian;
  j["envelope_projective"] = v.envelope_projective;
  j["envelope_stably_zero"] = v.envelope_stably_zero;
  j["envelope_dims"] = dims_json(v.envelope_of_ring.dims());
  j["envelope_of_ring"] = to_json(v.envelope_of_ring);
  j["reasons"] = v.reasons;
  j["epi_mono_factorization"] =
      v.epi_mono_factorization ? Json(*v.epi_mono_factorization) : Json(nullptr);
  if (v.stable_envelope) j["stable_envelope"] = to_json(*v.stable_envelope);
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Json to_json(const CensusRow& r) {
  return {{"orientation", r.orientation},
          {"monotone", r.monotone},
          {"abelian", r.verdict.abelian},
          {"envelope_projective", r.verdict.envelope_projective},
          {"envelope_stably_zero", r.verdict.envelope_stably_zero},
          {"envelope_dims", dims_json(r.verdict.envelope_of_ring.dims())},
          {"witness", r.verdict.witness ? to_json(*r.verdict.witness) : Json(nullptr)}};
}

Json to_json(const EquivalenceReport& r) {
  Json j = {{"n", r.n},
            {"expected_count", r.expected_count},
            {"counts_match", r.counts_match},
            {"stable_objects", r.stable_objects},
            {"target_objects", r.target_objects},
            {"stable_table", r.stable_table},
            {"target_table", r.target_table}};
  if (r.bijection) {
    Json b = Json::object();
    for (std::size_t i = 0; i < r.bijection->size(); ++i)
      b[r.stable_objects[i]] = r.target_objects[(*r.bijection)[i]];
    j["bijection"] = b;
  } else {
    j["bijection"] = nullptr;
  }
  return j;
}

Json to_json(const SuiteReport& r) {
  return {{"suite", r.suite},     {"trials", r.trials},   {"seed", r.seed},
          {"field", r.field},     {"quivers", r.quivers}, {"checks", r.checks},
          {"passed", r.passed},   {"failures", r.failures},
          {"findings", r.findings}};
}

// ------------------------------------------------------------ parsers

Matrix matrix_from_json(const Json& j, PrimeField field, std::size_t rows,
                        std::size_t cols) {
  require(j.is_array(), ErrorKind::InvalidInput, "matrix must be an array of rows");
  if (rows == 0 || cols == 0) {
    // Empty shapes: accept [] or the right number of empty rows.
    require(j.empty() || j.size() == rows, ErrorKind::DimensionMismatch,
            "matrix has the wrong number of rows");
    for (const auto& r : j)
      require(r.is_array() && r.empty(), ErrorKind::DimensionMismatch,
              "matrix rows must be empty");
    return Matrix(field, rows, cols);
  }
  require(j.size() == rows, ErrorKind::DimensionMismatch,
          "matrix has " + std::to_string(j.size()) + " rows, expected " +
              std::to_string(rows));
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    require(row.is_array() && row.size() == cols, ErrorKind::DimensionMismatch,
            "matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      require(row[c].is_number_integer(), ErrorKind::InvalidInput,
              "matrix entries must be integers");
      m(r, c) = field.reduce(row[c].get<std::int64_t>());
    }
  }
  return m;
}

Quiver quiver_from_json(const Json& j) {
  const std::size_t n = count_of(field_of(j, "vertices"), "vertices");
  const Json& arr = field_of(j, "arrows");
  require(arr.is_array(), ErrorKind::InvalidInput, "arrows must be an array");
  std::vector<Arrow> arrows;
  for (const auto& a : arr) {
    const Json& name = field_of(a, "name");
    require(name.is_string(), ErrorKind::InvalidInput, "arrow name must be a string");
    const Json& from = field_of(a, "from");
    const Json& to = field_of(a, "to");
    require(from.is_number_integer() && to.is_number_integer(),
            ErrorKind::InvalidInput, "arrow endpoints must be integers");
    const std::int64_t s = from.get<std::int64_t>(), t = to.get<std::int64_t>();
    // Out-of-range endpoints are reported by quiver validation.
    auto idx = [&](std::int64_t v) {
      return v >= 1 ? static_cast<std::size_t>(v - 1) : n + 1;
    };
    arrows.push_back({name.get<std::string>(), idx(s), idx(t)});
  }
  return Quiver(n, std::move(arrows));
}

Representation representation_from_json(const Json& j, PrimeField field) {
  QuiverPtr q = share(quiver_from_json(field_of(j, "quiver")));
  const Json& dj = field_of(j, "dims");
  require(dj.is_array() && dj.size() == q->vertex_count(), ErrorKind::DimensionMismatch,
          "dims must list one dimension per vertex");
  std::vector<std::size_t> dims;
  for (const auto& d : dj) dims.push_back(count_of(d, "dimension"));
  const Json& mats = field_of(j, "matrices");
  require(mats.is_object(), ErrorKind::InvalidInput, "matrices must be an object");
  for (const auto& [name, _] : mats.items())
    require(q->arrow_index(name).has_value(), ErrorKind::InvalidInput,
            "matrix given for unknown arrow '" + name + "'");
  std::vector<Matrix> action;
  for (const auto& a : q->arrows()) {
    const std::size_t r = dims[a.target], c = dims[a.source];
    if (mats.contains(a.name)) {
      action.push_back(matrix_from_json(mats.at(a.name), field, r, c));
    } else {
      require(r == 0 || c == 0, ErrorKind::InvalidInput,
              "missing matrix for arrow '" + a.name + "'");
      action.emplace_back(field, r, c);
    }
  }
  return Representation(std::move(q), field, std::move(dims), std::move(action));
}

Morphism morphism_from_json(const Json& j, PrimeField field) {
  Representation src = representation_from_json(field_of(j, "source"), field);
  Representation dst = representation_from_json(field_of(j, "target"), field);
  const Json& cj = field_of(j, "components");
  require(cj.is_array() && cj.size() == src.vertex_count(), ErrorKind::DimensionMismatch,
          "components must list one matrix per vertex");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < src.vertex_count(); ++v)
    comps.push_back(matrix_from_json(cj[v], field, dst.dim(v), src.dim(v)));
  return Morphism(std::move(src), std::move(dst), std::move(comps));
}

}  // namespace stabcat
