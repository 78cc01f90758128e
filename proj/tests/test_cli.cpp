#include <sstream>

#include "doctest.h"
#include "stabcat/cli.hpp"
#include "support.hpp"

using namespace stabcat;
using testing::an;

namespace {

const PrimeField F(101);

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

Json parse_out(const Run& r) { return Json::parse(r.out); }

std::string inline_morphism(const Morphism& f) { return to_json(f).dump(); }

Morphism socle_quotient_i2() {
  Representation i2 = injective(an(3, "><"), F, 1);
  return cokernel(as_representation(socle(i2)).inclusion).projection;
}

}  // namespace

TEST_CASE("classify") {
  Run r = run({"classify", "--an", "3", "--orientation", "><"});
  CHECK(r.code == 0);
  Json j = parse_out(r);
  CHECK(j.begin().key() == "field");
  CHECK(j["field"] == 101);
  CHECK(j["result"]["abelian"] == false);
  CHECK(j["result"]["epi_mono_factorization"] == false);

  Run eq = run({"classify", "--an", "4"});
  CHECK(eq.code == 0);
  CHECK(parse_out(eq)["result"]["abelian"] == true);

  Json q = to_json(*testing::kronecker());
  Run kr = run({"classify", "--quiver", q.dump(), "--field", "7"});
  CHECK(kr.code == 0);
  CHECK(parse_out(kr)["field"] == 7);
}

TEST_CASE("verify") {
  Run r = run({"verify", "--suite", "S-mono", "--trials", "10", "--seed", "1"});
  CHECK(r.code == 0);
  Json j = parse_out(r);
  CHECK(j["result"]["passed"] == true);
  CHECK(j["result"]["seed"] == 1);
  CHECK(j["result"]["field"] == 101);
  CHECK(j["result"]["trials"] == 10);

  Run all = run({"verify", "--suite", "all", "--trials", "3", "--seed", "2"});
  CHECK(all.code == 0);
  CHECK(parse_out(all)["result"]["reports"].size() == suite_names().size());

  Run one = run({"verify", "--suite", "S-epi", "--trials", "4", "--an", "4", "--orientation",
                 "<><"});
  CHECK(one.code == 0);
  CHECK(parse_out(one)["result"]["quivers"] == Json::array({"A4:<><"}));

  Run unknown = run({"verify", "--suite", "S-none"});
  CHECK(unknown.code == 2);
  CHECK(Json::parse(unknown.err)["error"]["kind"] == "UnknownSuite");
}

TEST_CASE("invalid input exits with 2 and an error document") {
  const std::vector<std::vector<std::string>> bad = {
      {"classify", "--quiver", "{not json"},
      {"classify", "--quiver", R"({"vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 1}]})"},
      {"classify", "--quiver", R"({"vertices": 2})"},
      {"classify", "--quiver", "/nonexistent/q.json"},
      {"classify"},
      {"census", "--an", "3", "--field", "9"},
      {"frobnicate"},
      {"classify", "--an", "3", "--format", "xml"},
      {"classify", "--an", "3", "--orientation", ">"},
      {"is-mono", "--morphism", R"({"source": {}})"},
      {"is-mono"},
      {"census", "--an", "-1"},
      {"witness", "--an", "3", "--seed", "x"},
  };
  for (const auto& args : bad) {
    Run r = run(args);
    CHECK_MESSAGE(r.code == 2, args[0]);
    CHECK(r.out.empty());
    Json e = Json::parse(r.err);
    CHECK(e["exit_code"] == 2);
    CHECK(e["error"].contains("kind"));
    CHECK(e["error"].contains("message"));
  }
  CHECK(Json::parse(run(bad[1]).err)["error"]["kind"] == "Cyclic");
}

TEST_CASE("precondition failures exit with 2") {
  Morphism pi = top(projective(an(2, ">"), F, 0)).projection;
  Run r = run({"normal-mono-cert", "--morphism", inline_morphism(socle_quotient_i2())});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.err)["error"]["kind"] == "NotAbelianCase");
  Run e = run({"normal-epi", "--morphism", inline_morphism(pi)});
  CHECK(e.code == 2);
  CHECK(Json::parse(e.err)["error"]["kind"] == "NotEpi");
}

TEST_CASE("criteria commands") {
  const std::string p = inline_morphism(socle_quotient_i2());
  const std::vector<std::pair<std::string, bool>> expect = {
      {"is-zero", false}, {"is-mono", true},      {"is-epi", true},
      {"is-iso", false},  {"is-split-mono", false}, {"is-split-epi", false},
      {"normal-epi", false}};
  for (const auto& [cmd, verdict] : expect) {
    Run r = run({cmd, "--morphism", p});
    CHECK_MESSAGE(r.code == 0, cmd);
    Json j = parse_out(r);
    CHECK(j["command"] == cmd);
    CHECK(j["result"]["verdict"] == verdict);
    CHECK(j["result"]["method"] == "both");
  }
  Run sh = run({"stable-hom", "--morphism", p});
  CHECK(sh.code == 0);
  Json j = parse_out(sh);
  CHECK(j["result"]["stably_zero"] == false);
  Morphism f = socle_quotient_i2();
  CHECK(j["result"]["quotient_dim"] ==
        HomSpace(f.source(), f.target()).dim() -
            testing::trivial_dim_by_spans(f.source(), f.target()));
}

TEST_CASE("torsion, sharp and witnesses") {
  QuiverPtr q = an(2, ">");
  Representation m = direct_sum(simple(q, F, 0), projective(q, F, 0)).object;
  const std::string rep = to_json(m).dump();
  Run t = run({"torsion", "--rep", rep});
  CHECK(t.code == 0);
  CHECK(parse_out(t)["result"]["dims"] == Json::array({1, 0}));
  Run s = run({"sharp", "--rep", rep});
  CHECK(s.code == 0);
  CHECK(parse_out(s)["result"]["sharp"]["dims"] == Json::array({1, 1}));
  CHECK(run({"canonical-split", "--rep", rep}).code == 0);

  Run w = run({"witness", "--an", "3", "--orientation", "><"});
  CHECK(w.code == 0);
  Json wj = parse_out(w);
  CHECK(wj["result"]["abelian"] == false);
  CHECK(wj["result"]["bimorphism"]["vertex"] == 2);
  CHECK(wj["result"]["non_normal_mono"]["vertex"] == 2);
  Run none = run({"witness", "--an", "3"});
  CHECK(none.code == 0);
  CHECK(parse_out(none)["result"]["abelian"] == true);

  Morphism pi = top(projective(q, F, 0)).projection;
  Run ew = run({"epi-witness", "--morphism", inline_morphism(pi)});
  CHECK(ew.code == 0);
  Morphism h = morphism_from_json(parse_out(ew)["result"]["h"], F);
  CHECK_FALSE(pushout_lift(pi, h).has_value());

  Run eq = run({"equivalence", "--n", "4"});
  CHECK(eq.code == 0);
  CHECK(parse_out(eq)["result"]["counts_match"] == true);
  Run cen = run({"census", "--an", "3"});
  CHECK(cen.code == 0);
  CHECK(parse_out(cen)["result"].size() == 4);
}

TEST_CASE("round trip") {
  Rng rng(40);
  for (int t = 0; t < 10; ++t) {
    Morphism f = random_test_morphism(an(3, "<>"), F, rng);
    Run r = run({"stable-hom", "--morphism", inline_morphism(f)});
    REQUIRE(r.code == 0);
    Json j = parse_out(r);
    CHECK(Json::parse(j.dump(2)) == j);
    CHECK(j.dump(2) + "\n" == r.out);
    Representation src = representation_from_json(j["result"]["source"], F);
    CHECK(src == f.source());
    CHECK(to_json(src) == j["result"]["source"]);
    for (const auto& g : j["result"]["representatives"])
      CHECK(morphism_from_json(g, F).source() == f.source());
  }
  Run c = run({"classify", "--an", "4", "--orientation", "<><"});
  Json v = parse_out(c);
  CHECK(Json::parse(v.dump()) == v);
  CHECK(quiver_from_json(v["result"]["quiver"]) == an_quiver(4, "<><"));
}

TEST_CASE("determinism") {
  const std::string p = inline_morphism(socle_quotient_i2());
  const std::vector<std::vector<std::string>> invocations = {
      {"classify", "--an", "4", "--orientation", "><>"},
      {"census", "--an", "3"},
      {"equivalence", "--n", "3"},
      {"verify", "--suite", "S-normalepi", "--trials", "8", "--seed", "11"},
      {"verify", "--suite", "S-torsion", "--trials", "8", "--seed", "11", "--format", "text"},
      {"is-iso", "--morphism", p},
      {"witness", "--an", "4", "--orientation", "<<>"},
  };
  for (const auto& args : invocations) {
    Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("text format") {
  Run r = run({"classify", "--an", "3", "--orientation", "><", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("abelian: false") != std::string::npos);
  CHECK(r.out.find("field: 101") != std::string::npos);
  Run h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("--orientation") != std::string::npos);
}
