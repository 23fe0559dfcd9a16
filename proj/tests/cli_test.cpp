#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"
#include "mvder/algebra.hpp"
#include "mvder/json_io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell, capturing stdout; stderr is discarded.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + MVDER_CLI_PATH " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST(CliCount, ChainReportsClosedFormToo) {
  RunResult r = run_cli("count \"L5\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "14\nclosed-form: 14\n");
}

TEST(CliCount, BooleanSquare) {
  RunResult r = run_cli("count \"B4\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(first_line(r.out), "9");
}

TEST(CliCount, ProductOfTwoAndThree) {
  RunResult r = run_cli("count \"L2 x L3\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "33\n");
}

TEST(CliCheck, ReportsStructure) {
  RunResult r = run_cli("check \"L3\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("axioms: pass"), std::string::npos);
  EXPECT_NE(r.out.find("ideals: 2"), std::string::npos);
  EXPECT_NE(r.out.find("lattice ideals: 3"), std::string::npos);
}

TEST(CliDerivations, TableOnThreeChainIsFrozen) {
  RunResult r = run_cli("derivations \"L3\" --format table");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "x: 0 1/2 1\n"
            "d1: 0 0 0\n"
            "d2: 0 0 1/2\n"
            "d3: 0 1/2 0\n"
            "d4: 0 1/2 1/2\n"
            "d5: 0 1/2 1\n");
}

TEST(CliDerivations, OutputIsDeterministic) {
  RunResult a = run_cli("derivations \"L2 x L3\" --format table");
  RunResult b = run_cli("derivations \"L2 x L3\" --format table");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  int lines = 0;
  for (char c : a.out) lines += c == '\n';
  EXPECT_EQ(lines, 34);  // header + 33 rows
}

TEST(CliDerivations, JsonShapeAndFilters) {
  RunResult r = run_cli("derivations \"L2 x L3\" --format json");
  EXPECT_EQ(r.exit_code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 33u);
  EXPECT_EQ(j[0]["images"], nlohmann::json({0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(j[0]["flags"]["principal"], true);
  EXPECT_EQ(j[0]["flags"]["witness"], 0);
  EXPECT_EQ(j[0]["fixed_points"], nlohmann::json({0}));

  nlohmann::json principal =
      nlohmann::json::parse(run_cli("derivations \"L2 x L3\" --format json --filter principal").out);
  EXPECT_EQ(principal.size(), 6u);
  nlohmann::json chi =
      nlohmann::json::parse(run_cli("derivations \"L2 x L3\" --format json --filter chi").out);
  EXPECT_EQ(chi.size(), 6u);
  nlohmann::json ider =
      nlohmann::json::parse(run_cli("derivations \"L2 x L3\" --format json --filter ider").out);
  EXPECT_EQ(ider.size(), 4u);
}

TEST(CliHasse, DotOnTwoChain) {
  RunResult r = run_cli("hasse \"L2\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "digraph {\n"
            "  rankdir=BT;\n"
            "  { rank=same; \"0 0\"; }\n"
            "  { rank=same; \"0 1\"; }\n"
            "  \"0 0\" -> \"0 1\";\n"
            "}\n");
}

TEST(CliHasse, LayersOnThreeChain) {
  RunResult r = run_cli("hasse \"L3\" --format layers");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "0 0 0\n"
            "0 0 1/2, 0 1/2 0\n"
            "0 1/2 1/2\n"
            "0 1/2 1\n"
            "\n"
            "0 1/2 1\n"
            "0 1/2 1/2\n"
            "0 0 1/2, 0 1/2 0\n"
            "0 0 0\n");
}

TEST(CliHasse, FamiliesSelectPosets) {
  EXPECT_EQ(run_cli("hasse \"L4\" --family chi --format layers").exit_code, 0);
  RunResult ider = run_cli("hasse \"L2 x L3\" --family ider");
  EXPECT_EQ(ider.exit_code, 0);
  // four members forming a diamond: four cover edges
  int edges = 0;
  for (std::size_t at = ider.out.find(" -> "); at != std::string::npos;
       at = ider.out.find(" -> ", at + 1)) {
    ++edges;
  }
  EXPECT_EQ(edges, 4);
}

TEST(CliIso, ChainAndProductPass) {
  RunResult chain = run_cli("iso \"L4\"");
  EXPECT_EQ(chain.exit_code, 0);
  EXPECT_NE(chain.out.find("Der~pairs: ok"), std::string::npos);
  RunResult product = run_cli("iso \"L2 x L3\"");
  EXPECT_EQ(product.exit_code, 0);
  EXPECT_NE(product.out.find("Der~pairs: skipped"), std::string::npos);
  EXPECT_NE(product.out.find("chi filter: ok"), std::string::npos);
}

TEST(CliDecompose, RecoversChainLengths) {
  mvder::FiniteMvAlgebra p = mvder::make_product({mvder::make_chain(3), mvder::make_chain(2)});
  std::string path = ::testing::TempDir() + "mvder_cli_product.json";
  std::ofstream(path) << mvder::algebra_to_json(p);
  RunResult r = run_cli("decompose --input " + path);
  EXPECT_EQ(r.exit_code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["chains"], nlohmann::json({2, 3}));
  ASSERT_EQ(j["iso"].size(), 6u);
  std::remove(path.c_str());
}

TEST(CliDecompose, RejectsNonMvTables) {
  std::string path = ::testing::TempDir() + "mvder_cli_broken.json";
  std::ofstream(path) << R"({"n":3,"oplus":[[0,1,2],[1,1,2],[2,2,2]],"neg":[2,1,0]})";
  EXPECT_EQ(run_cli("decompose --input " + path).exit_code, 1);
  std::remove(path.c_str());
}

TEST(CliClassifySizes, ReportsClassesAndChecks) {
  RunResult r = run_cli("classify-sizes --max 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("size 4: chains [2,2] |Der| 9"), std::string::npos);
  EXPECT_NE(r.out.find("size 4: chains [4] |Der| 9"), std::string::npos);
  EXPECT_NE(r.out.find("size classification and floors: ok"), std::string::npos);
  EXPECT_NE(r.out.find("der-lattice isomorphism between non-isomorphic algebras: none"),
            std::string::npos);
}

TEST(CliChang, ReportsJson) {
  RunResult r = run_cli("chang --window 20");
  EXPECT_EQ(r.exit_code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["window"], 20);
  EXPECT_EQ(j["eq1_ok"], true);
  EXPECT_EQ(j["injective_on_window"], true);
  EXPECT_EQ(j["image_of_one"], "c*");

  nlohmann::json principal = nlohmann::json::parse(run_cli("chang --window 20 --op principal").out);
  EXPECT_EQ(principal["eq1_ok"], true);
  EXPECT_EQ(principal["injective_on_window"], false);
}

TEST(CliVerify, FullSuitePasses) {
  EXPECT_EQ(run_cli("verify \"B4\"").exit_code, 0);
  RunResult r = run_cli("verify \"L5\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliExitCodes, ParseErrorsExitTwo) {
  EXPECT_EQ(run_cli("count \"L1\"").exit_code, 2);
  EXPECT_EQ(run_cli("count \"B6\"").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("count").exit_code, 2);  // missing argument
  EXPECT_EQ(run_cli("derivations \"L3\" --format yaml").exit_code, 2);
}

TEST(CliExitCodes, ResourceCapsExitThree) {
  EXPECT_EQ(run_cli("count \"L100 x L100\"").exit_code, 3);
  EXPECT_EQ(run_cli("count \"L6\" --max-search 10").exit_code, 3);
}

TEST(CliExitCodes, EnvironmentCapApplies) {
  EXPECT_EQ(run_cli("count \"L2 x L3\"", "MVDER_MAX_ELEMENTS=4 ").exit_code, 3);
  // an explicit flag wins over the environment
  EXPECT_EQ(run_cli("count \"L2 x L3\" --max-elements 4096", "MVDER_MAX_ELEMENTS=4 ").exit_code, 0);
}

}  // namespace
