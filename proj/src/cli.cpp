#include "stabcat/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "stabcat/error.hpp"
#include "stabcat/json_io.hpp"

namespace stabcat {

namespace {

struct Config {
  std::uint32_t field_prime = PrimeField::kDefaultModulus;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::string format = "json";
  std::string quiver, rep, morphism, orientation, suite;
  std::optional<std::size_t> an, n;
};

// Exit code plus result; the command name and field are added by dispatch.
struct Outcome {
  int code = 0;
  Json result;
};

// Inline JSON when the argument starts with '{', standard input for "-",
// otherwise a file path.
Json load(const std::string& source, const char* flag) {
  require(!source.empty(), ErrorKind::InvalidInput,
          std::string("missing required flag ") + flag);
  std::string text;
  if (source.front() == '{') {
    text = source;
  } else if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(source);
    require(in.good(), ErrorKind::InvalidInput, "cannot read " + source);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return Json::parse(text);
}

QuiverPtr quiver_of(const Config& c) {
  if (!c.quiver.empty()) {
    require(!c.an, ErrorKind::InvalidInput, "--quiver and --an are exclusive");
    return share(quiver_from_json(load(c.quiver, "--quiver")));
  }
  require(c.an.has_value(), ErrorKind::InvalidInput, "need --quiver or --an");
  require(*c.an >= 1, ErrorKind::InvalidInput, "--an must be at least 1");
  const std::string orient =
      c.orientation.empty() ? std::string(*c.an - 1, '>') : c.orientation;
  return share(an_quiver(*c.an, orient));
}

Representation rep_of(const Config& c, PrimeField f) {
  return representation_from_json(load(c.rep, "--rep"), f);
}

Morphism morphism_of(const Config& c, PrimeField f) {
  return morphism_from_json(load(c.morphism, "--morphism"), f);
}

using Command = std::function<Outcome(const Config&, PrimeField)>;

Outcome criterion(const Config& c, PrimeField f,
                  CriterionReport (*test)(const Morphism&)) {
  return {0, to_json(test(morphism_of(c, f)))};
}

Outcome run_verify(const Config& c, PrimeField f) {
  std::vector<QuiverPtr> quivers;
  if (!c.quiver.empty() || c.an) quivers.push_back(quiver_of(c));
  std::vector<std::string> names;
  if (c.suite == "all")
    names = suite_names();
  else
    names = {c.suite};
  require(!c.suite.empty(), ErrorKind::InvalidInput, "missing required flag --suite");

  Json reports = Json::array();
  bool passed = true;
  for (const auto& name : names) {
    SuiteReport r = run_suite(name, c.trials, c.seed, f, quivers);
    passed = passed && r.passed;
    reports.push_back(to_json(r));
  }
  Json result = names.size() == 1 ? reports[0] : Json{{"passed", passed}, {"reports", reports}};
  return {passed ? 0 : 1, std::move(result)};
}

Outcome run_witness(const Config& c, PrimeField f) {
  QuiverPtr q = quiver_of(c);
  auto envelope = stable_envelope_procedure(q, f);
  Json j = Json::object();
  j["abelian"] = !envelope.has_value();
  if (!envelope) {
    j["stable_envelope"] = nullptr;
    j["bimorphism"] = nullptr;
    j["non_normal_mono"] = nullptr;
    j["epi_mono_factorization"] = nullptr;
    return {0, j};
  }
  j["stable_envelope"] = to_json(*envelope);
  j["bimorphism"] = to_json(bimorphism_witness(q, f));
  j["non_normal_mono"] = to_json(non_normal_mono_witness(q, f));
  j["epi_mono_factorization"] = false;
  return {0, j};
}

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table = {
      {"classify", [](const Config& c, PrimeField f) -> Outcome {
         return {0, to_json(classify(quiver_of(c), f))};
       }},
      {"census", [](const Config& c, PrimeField f) -> Outcome {
         require(c.an.has_value(), ErrorKind::InvalidInput, "census needs --an");
         require(*c.an >= 1 && *c.an <= 6, ErrorKind::InvalidInput,
                 "census supports 1 <= n <= 6");
         Json rows = Json::array();
         for (const auto& r : census(*c.an, f)) rows.push_back(to_json(r));
         return {0, rows};
       }},
      {"equivalence", [](const Config& c, PrimeField f) -> Outcome {
         require(c.n.has_value(), ErrorKind::InvalidInput, "equivalence needs --n");
         return {0, to_json(equivalence_table(*c.n, f))};
       }},
      {"verify", run_verify},
      {"witness", run_witness},
      {"torsion", [](const Config& c, PrimeField f) -> Outcome {
         return {0, to_json(torsion_submodule(rep_of(c, f)))};
       }},
      {"sharp", [](const Config& c, PrimeField f) -> Outcome {
         Quotient q = sharp(rep_of(c, f));
         return {0, Json{{"sharp", to_json(q.object)},
                         {"projection", to_json(q.projection)}}};
       }},
      {"canonical-split", [](const Config& c, PrimeField f) -> Outcome {
         return {0, to_json(canonical_split(rep_of(c, f)))};
       }},
      {"is-zero", [](const Config& c, PrimeField f) { return criterion(c, f, is_stably_zero); }},
      {"is-mono", [](const Config& c, PrimeField f) { return criterion(c, f, is_stable_mono); }},
      {"is-epi", [](const Config& c, PrimeField f) { return criterion(c, f, is_stable_epi); }},
      {"is-split-mono",
       [](const Config& c, PrimeField f) { return criterion(c, f, is_stable_split_mono); }},
      {"is-split-epi",
       [](const Config& c, PrimeField f) { return criterion(c, f, is_stable_split_epi); }},
      {"is-iso", [](const Config& c, PrimeField f) { return criterion(c, f, is_stable_iso); }},
      {"normal-epi", [](const Config& c, PrimeField f) { return criterion(c, f, is_normal_epi); }},
      {"stable-hom", [](const Config& c, PrimeField f) -> Outcome {
         Morphism m = morphism_of(c, f);
         StableHom h(m.source(), m.target());
         Json j = to_json(h);
         j["class"] = h.project(m);
         j["stably_zero"] = h.is_trivial(m);
         return {0, j};
       }},
      {"normal-mono-cert", [](const Config& c, PrimeField f) -> Outcome {
         return {0, to_json(normal_mono_certificate(morphism_of(c, f)))};
       }},
      {"epi-witness", [](const Config& c, PrimeField f) -> Outcome {
         EpiWitness w = epi_witness(morphism_of(c, f));
         return {0, Json{{"h", to_json(w.h)},
                         {"test_map", to_json(w.test_map)},
                         {"test_object", to_json(w.test_object)}}};
       }},
  };
  return table;
}

// ------------------------------------------------------------ text output

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool flat(const Json& j) {
  if (!j.is_array()) return j.is_primitive();
  for (const auto& e : j)
    if (!e.is_primitive()) return false;
  return true;
}

// Scalars and flat arrays only; nested objects are summarized by their keys.
void render_text(const Json& j, std::ostream& out, const std::string& indent) {
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << indent << "[" << i << "]\n";
      render_text(j[i], out, indent + "  ");
    }
    return;
  }
  if (!j.is_object()) {
    out << indent << scalar_text(j) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (flat(value)) {
      out << indent << key << ": " << (value.is_array() ? value.dump() : scalar_text(value))
          << "\n";
    } else if (key == "reports" || key == "failures" || key == "findings" ||
               key == "flags") {
      out << indent << key << ":\n";
      render_text(value, out, indent + "  ");
    } else {
      out << indent << key << ": <" << (value.is_array() ? "list" : "object") << ">\n";
    }
  }
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message,
                int code) {
  Json j = {{"error", {{"kind", kind}, {"message", message}}}, {"exit_code", code}};
  err << j.dump() << "\n";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : commands()) v.push_back(name);
    return v;
  }();
  return names;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  std::string command;
  CLI::App app{"Computations in the projectively stable category of path algebras"};
  app.add_option("command", command, "one of the listed commands")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--field", c.field_prime, "prime modulus of the ground field");
  app.add_option("--seed", c.seed, "seed for the mt19937_64 generator");
  app.add_option("--trials", c.trials, "trials per suite");
  app.add_option("--format", c.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--quiver", c.quiver, "quiver JSON: a path, '-' or inline");
  app.add_option("--rep", c.rep, "representation JSON: a path, '-' or inline");
  app.add_option("--morphism", c.morphism, "morphism JSON: a path, '-' or inline");
  app.add_option("--an", c.an, "use the A_n quiver with n vertices");
  app.add_option("--orientation", c.orientation, "A_n orientation, e.g. '><'");
  app.add_option("--suite", c.suite, "suite name or 'all'");
  app.add_option("--n", c.n, "size for the equivalence table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "InvalidInput", e.what(), 2);
    return 2;
  }

  try {
    const PrimeField field(c.field_prime);
    Outcome o = commands().at(command)(c, field);
    Json doc = Json::object();
    doc["field"] = c.field_prime;
    doc["command"] = command;
    doc["result"] = std::move(o.result);
    if (c.format == "text") {
      out << "field: " << c.field_prime << "\ncommand: " << command << "\n";
      render_text(doc["result"], out, "");
    } else {
      out << doc.dump(2) << "\n";
    }
    return o.code;
  } catch (const Error& e) {
    const int code = is_internal(e.kind()) ? 3 : 2;
    emit_error(err, to_string(e.kind()), e.what(), code);
    return code;
  } catch (const nlohmann::json::exception& e) {
    emit_error(err, "InvalidInput", e.what(), 2);
    return 2;
  }
}

}  // namespace stabcat
