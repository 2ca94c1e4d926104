#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "spancalc/fock.hpp"
#include "spancalc/report.hpp"

using namespace spancalc;

TEST_CASE("csv tables carry the schema row and quoted labels") {
  const QMatrix id = qmatrix_identity({{0}, {1}});
  CHECK(qmatrix_csv(id) ==
        "schema_version,1\n"
        "label,\"[0]\",\"[1]\"\n"
        "\"[0]\",1,0\n"
        "\"[1]\",0,1\n");
  CHECK(dimblock_csv(path_block(0, 2)) ==
        "schema_version,1\n"
        "label,\"[2]\",\"[1,1]\"\n"
        "\"[]\",1,1\n");
}

TEST_CASE("text tables align columns under their labels") {
  const QMatrix id = qmatrix_identity({{0}, {1}});
  CHECK(qmatrix_text(id, "id") ==
        "id (schema 1, 2x2)\n"
        "     [0]  [1]\n"
        "[0]    1    0\n"
        "[1]    0    1\n");
  CHECK(dimblock_text(path_block(0, 2), "paths 0->2") ==
        "paths 0->2 (schema 1, 1x2)\n"
        "    [2]  [1,1]\n"
        "[]    1      1\n");
}

TEST_CASE("json matrices parse back with sorted keys and string entries") {
  const QMatrix id = qmatrix_identity({{0}, {1}});
  const std::string text = qmatrix_json(id, "id");
  CHECK(text == qmatrix_json(id, "id"));  // byte-stable
  const auto j = nlohmann::json::parse(text);
  CHECK(j["schema_version"] == 1);
  CHECK(j["kind"] == "rational-matrix");
  CHECK(j["title"] == "id");
  CHECK(j["row_labels"] == nlohmann::json::parse("[[0],[1]]"));
  CHECK(j["entries"][0][0] == "1");
  CHECK(j["entries"][0][1] == "0");

  const auto b = nlohmann::json::parse(dimblock_json(path_block(2, 4), "m24"));
  CHECK(b["kind"] == "integer-block");
  CHECK(b["row_labels"] == nlohmann::json::parse("[[2],[1,1]]"));
  CHECK(b["entries"] ==
        nlohmann::json::parse("[[1,2,1,1,0],[0,1,1,2,1]]"));
}

TEST_CASE("lattice emitters agree with the branching rule") {
  CHECK(lattice_dot(2) ==
        "digraph young_lattice {\n"
        "  rankdir=BT;\n"
        "  \"[]\";\n"
        "  \"[1]\";\n"
        "  \"[2]\";\n"
        "  \"[1,1]\";\n"
        "  \"[]\" -> \"[1]\";\n"
        "  \"[1]\" -> \"[2]\";\n"
        "  \"[1]\" -> \"[1,1]\";\n"
        "}\n");

  const auto j = nlohmann::json::parse(lattice_json(4));
  CHECK(j["schema_version"] == 1);
  CHECK(j["max"] == 4);
  CHECK(j["nodes"].size() == 12);
  CHECK(j["edges"].size() == 14);
  CHECK(j["nodes"][0] == nlohmann::json::array());
  CHECK(j["nodes"][11] == nlohmann::json::parse("[1,1,1,1]"));

  const std::string dot = lattice_dot(4);
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos;
       at = dot.find("->", at + 1))
    ++arrows;
  CHECK(arrows == 14);

  CHECK_THROWS_AS(lattice_dot(-1), std::invalid_argument);
  CHECK_THROWS_AS(lattice_json(-1), std::invalid_argument);
}

TEST_CASE("sequence emitters render exact rationals") {
  const auto gf = stuff_type_gf(identity_stuff_type(5), 4);
  CHECK(sequence_csv(gf) ==
        "schema_version,1\n"
        "index,value\n"
        "0,1\n"
        "1,1\n"
        "2,1/2\n"
        "3,1/6\n"
        "4,1/24\n");
  CHECK(sequence_json(gf, "identity stuff type") ==
        "{\n"
        "  \"kind\": \"sequence\",\n"
        "  \"schema_version\": 1,\n"
        "  \"title\": \"identity stuff type\",\n"
        "  \"values\": [\n"
        "    \"1\",\n"
        "    \"1\",\n"
        "    \"1/2\",\n"
        "    \"1/6\",\n"
        "    \"1/24\"\n"
        "  ]\n"
        "}\n");
  CHECK(sequence_text(gf, "identity stuff type") ==
        "identity stuff type (schema 1)\n"
        "  0: 1\n"
        "  1: 1\n"
        "  2: 1/2\n"
        "  3: 1/6\n"
        "  4: 1/24\n");
}

TEST_CASE("verification reports summarize pass counts") {
  std::vector<RelationResult> rs(2);
  rs[0] = {"cap then cup", RelationKind::Equal, true, 4, 3, 3, 1.5};
  rs[1] = {"no collapse", RelationKind::NotEqual, false, 4, 2, 1, 0.5};
  CHECK_FALSE(all_pass(rs));
  CHECK(heisenberg_report_csv(rs) ==
        "schema_version,1\n"
        "name,relation,pass,bound,lhs_components,rhs_components\n"
        "\"cap then cup\",equal,true,4,3,3\n"
        "\"no collapse\",not-equal,false,4,2,1\n");
  CHECK(heisenberg_report_text(rs, 4) ==
        "heisenberg relations at window 4 (schema 1)\n"
        "PASS  cap then cup  [equal, bound 4, lhs 3, rhs 3]\n"
        "FAIL  no collapse  [not-equal, bound 4, lhs 2, rhs 1]\n"
        "overall: FAIL (1/2)\n");
  const auto j = nlohmann::json::parse(heisenberg_report_json(rs, 4));
  CHECK(j["suite"] == "heisenberg");
  CHECK(j["tool"] == std::string("spancalc ") + kToolVersion);
  CHECK(j["status"] == "fail");
  CHECK(j["total"] == 2);
  CHECK(j["passed"] == 1);
  CHECK(j["max_card"] == 4);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["relation"] == "not-equal");
  // Timings stay out of serialized reports so bytes are reproducible.
  CHECK_FALSE(j["checks"][0].contains("millis"));

  rs[1].pass = true;
  CHECK(all_pass(rs));
  CHECK(nlohmann::json::parse(
            heisenberg_report_json(rs, 4))["status"] == "pass");
}

TEST_CASE("sln reports carry the index data of every check") {
  std::vector<SlnCheck> cs(1);
  cs[0] = {"EF i=1 j=1 n=2", SlnRelation::EF, 1, 1, 2, true, 5, 40, 40};
  CHECK(all_pass(cs));
  CHECK(sln_report_csv(cs) ==
        "schema_version,1\n"
        "name,relation,i,j,n,pass,bound,lhs_components,rhs_components\n"
        "\"EF i=1 j=1 n=2\",EF,1,1,2,true,5,40,40\n");
  CHECK(sln_report_text(cs, 5) ==
        "sl_n relations at window 5 (schema 1)\n"
        "PASS  EF i=1 j=1 n=2  [bound 5, lhs 40, rhs 40]\n"
        "overall: PASS (1/1)\n");
  const auto j = nlohmann::json::parse(sln_report_json(cs, 5));
  CHECK(j["suite"] == "sln");
  CHECK(j["status"] == "pass");
  CHECK(j["checks"][0]["relation"] == "EF");
  CHECK(j["checks"][0]["i"] == 1);
  CHECK(j["checks"][0]["n"] == 2);
  CHECK_FALSE(j["checks"][0].contains("millis"));
}

TEST_CASE("live catalog reports are byte-stable across reruns") {
  const auto catalog = heisenberg_catalog();
  const auto first = check_catalog(catalog, 4);
  const auto second = check_catalog(catalog, 4);
  // millis differ between runs; serialized output must not.
  CHECK(heisenberg_report_json(first, 4) == heisenberg_report_json(second, 4));
  CHECK(heisenberg_report_csv(first) == heisenberg_report_csv(second));
  CHECK(heisenberg_report_text(first, 4) == heisenberg_report_text(second, 4));
}
