#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "oracles.hpp"

namespace {

struct CliRun {
  int status;
  std::string out;
};

// Runs the CLI with stderr discarded unless `merge` is set.
CliRun run(const std::string& args, bool merge = false) {
  std::string cmd = std::string("'") + PEANO_CLI_PATH + "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string src(const std::string& rel) { return std::string("'") + PEANO_SOURCE_DIR + "/" + rel + "'"; }

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(PEANO_SOURCE_DIR) + "/tests/golden/" + name);
  return nlohmann::json::parse(in);
}

void expect_golden(const std::string& args, const std::string& name, int status = 0) {
  CliRun r = run("--json " + args);
  EXPECT_EQ(r.status, status) << args;
  nlohmann::json got = nlohmann::json::parse(r.out);
  EXPECT_EQ(got.at("schema"), 1) << args;
  EXPECT_EQ(got, golden(name)) << args << "\n" << got.dump(2);
}

}  // namespace

TEST(Cli, CheckAcceptsFixture) {
  CliRun r = run("check " + src("proofs/imp_refl.proof"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("accepted (5 lines)"), std::string::npos) << r.out;
}

TEST(Cli, CheckRejects) {
  CliRun r = run("check " + src("proofs/broken.proof"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("2. FAIL: major premise shape mismatch"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("rejected at line 2"), std::string::npos);
}

TEST(Cli, CheckDiscoversQuestionMarks) {
  EXPECT_EQ(run("check " + src("proofs/imp_refl_bare.proof")).status, 0);
  EXPECT_EQ(run("check " + src("proofs/nstar.proof")).status, 0);
}

TEST(Cli, DiscoverPrintsAnnotatedProof) {
  CliRun r = run("discover " + src("proofs/imp_refl_bare.proof"));
  EXPECT_EQ(r.status, 0);
  std::ifstream in(std::string(PEANO_SOURCE_DIR) + "/proofs/imp_refl.proof");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string expected;
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty() && line[0] != '#') expected += line + '\n';
  EXPECT_EQ(r.out, expected);
}

TEST(Cli, Partitions) {
  CliRun r = run("goldbach partitions 18");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "(5,13) (7,11)\n");
  EXPECT_EQ(run("goldbach partitions 17").status, 2);
}

TEST(Cli, ModelEvalText) {
  CliRun r = run("model eval --alpha 18 --u 1 --bound 50 --wff \"(ex x1 ((x1 + x1) = S(S(S(S(0))))))\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "True, witness 2\n");

  CliRun env = run("model eval --alpha 18 --u 3/2 --bound 5 --wff \"((x1 + x2) = S(S(S(0))))\" --env x1=1,x2=2");
  EXPECT_EQ(env.out, "True\n");
  CliRun strict = run("model eval --alpha 18 --u 2 --bound 30 --strict --wff \"(all x1 ~(S(x1) = 0))\"");
  EXPECT_EQ(strict.out, "Unknown\n");
  CliRun cex = run("model eval --alpha 18 --u 2 --bound 30 --wff \"(all x1 (x1 = 0))\"");
  EXPECT_EQ(cex.out, "False, counterexample 1\n");
}

TEST(Cli, ModelAxiomsText) {
  CliRun r = run("model axioms --alpha 24 --u 1.5 --bound 20");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "N1 Unknown\nN2 Unknown\nN3 Unknown\nN4 Unknown\nN5 Unknown\nN6 Unknown\n");
}

TEST(Cli, LimitsCsv) {
  CliRun r = run("model limits --alpha 18 --nmax 3 --steps 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "alpha,u,n,psi,deviation\n"
            "18,1.5,0,0,0\n18,1.5,1,1,0\n18,1.5,2,2,0\n18,1.5,3,3.5,0.5\n"
            "18,1,0,0,0\n18,1,1,1,0\n18,1,2,2,0\n18,1,3,3,0\n");
}

TEST(Cli, ScanCsvMatchesOracle) {
  CliRun r = run("goldbach scan --limit 200 --chunks 3 --csv");
  EXPECT_EQ(r.status, 0);
  std::string expected = "alpha,count\n";
  for (std::uint64_t a = 0; a <= 200; ++a)
    if (oracle::frakN(a)) expected += std::to_string(a) + ',' + std::to_string(oracle::partitions(a).size()) + '\n';
  EXPECT_EQ(r.out, expected);
}

TEST(Cli, SentenceText) {
  CliRun r = run("sentence goldbach");
  EXPECT_EQ(r.status, 0);
  CliRun p = run("parse \"" + r.out.substr(0, r.out.size() - 1) + "\"");
  EXPECT_EQ(p.out, r.out);
  CliRun c = run("sentence goldbach --classical");
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out, r.out);
}

TEST(Cli, ParseIsIdempotent) {
  CliRun once = run("parse \"(ex x2 ((x2 = S(0)) & (0 = 0)))\"");
  EXPECT_EQ(once.status, 0);
  EXPECT_EQ(once.out, "~(all x2 ~~((x2 = S(0)) -> ~(0 = 0)))\n");
  CliRun twice = run("parse \"" + once.out.substr(0, once.out.size() - 1) + "\"");
  EXPECT_EQ(twice.out, once.out);
  EXPECT_EQ(run("parse --sugar \"(ex x2 ((x2 = S(0)) & (0 = 0)))\"").out, "(ex x2 ((x2 = S(0)) & (0 = 0)))\n");
}

TEST(Cli, JsonGolden) {
  expect_golden("parse \"(all x1 ~(S(x1) = 0))\"", "parse.json");
  expect_golden("check " + src("proofs/imp_refl.proof"), "check_imp_refl.json");
  expect_golden("check " + src("proofs/broken.proof"), "check_broken.json", 1);
  expect_golden("discover " + src("proofs/imp_refl_bare.proof"), "discover_imp_refl.json");
  expect_golden("goldbach scan --limit 60", "scan_60.json");
  expect_golden("goldbach partitions 18", "partitions_18.json");
  expect_golden("model axioms --alpha 18 --u 2 --bound 50", "axioms_18_2.json");
  expect_golden("model eval --alpha 18 --u 1 --bound 50 --wff \"(ex x1 ((x1 + x1) = S(S(S(S(0))))))\"",
                "eval_double.json");
  expect_golden("model limits --alpha 18 --nmax 4 --steps 2", "limits_18.json");
  expect_golden("sentence goldbach", "sentence.json");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("parse \"(0 = \"").status, 2);
  EXPECT_EQ(run("check /nonexistent/file.proof").status, 2);
  EXPECT_EQ(run("model eval --alpha 17 --u 1 --bound 5 --wff \"(0 = 0)\"").status, 2);
  EXPECT_EQ(run("model eval --alpha 18 --u 0.5 --bound 5 --wff \"(0 = 0)\"").status, 2);
  EXPECT_EQ(run("model eval --alpha 18 --u 1 --bound 5 --wff \"(x1 = 0)\"").status, 2);
  EXPECT_EQ(run("model limits --alpha 18 --nmax 3 --steps 0").status, 0);
  CliRun both = run("parse \"(0 = 0)\" --file " + src("proofs/broken.proof"));
  EXPECT_EQ(both.status, 2);
  CliRun msg = run("parse \"(0 = \"", true);
  EXPECT_NE(msg.out.find("syntax error"), std::string::npos);
}

TEST(Cli, JsonErrorsStayOffStdout) {
  CliRun r = run("--json parse \"(0 = \"");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(r.out.empty()) << r.out;
}
