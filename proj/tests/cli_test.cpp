#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

std::string binPath() {
  const char* p = std::getenv("NNML_BIN");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdinData = "") {
  std::string outFile = "cli_test_stdout.tmp";
  std::string inFile = "cli_test_stdin.tmp";
  std::string cmd = binPath() + " " + args;
  if (!stdinData.empty()) {
    std::ofstream f(inFile);
    f << stdinData;
    cmd += " < " + inFile;
  }
  cmd += " > " + outFile + " 2> cli_test_stderr.tmp";
  int rc = std::system(cmd.c_str());
  std::ifstream f(outFile);
  std::stringstream ss;
  ss << f.rdbuf();
  int status = -1;
  if (WIFEXITED(rc)) status = WEXITSTATUS(rc);
  return {status, ss.str()};
}

}  // namespace

TEST_CASE("prove exit codes") {
  CHECK(run("prove --logic EC \"[] (~q & r), [] (p & q) => [] false\"").status ==
        0);
  CHECK(run("prove --logic CKCEM \"=> (p > r) | (q > ~r)\"").status == 1);
  CHECK(run("prove --logic K \"p =>\"").status == 1);
  CHECK(run("prove --logic K \"p => (\"").status == 2);
  CHECK(run("prove --logic NOPE \"p => p\"").status == 2);
  CHECK(run("prove --logic K", "p => p").status == 0);  // stdin input
}

TEST_CASE("interp produces a verified interpolant or a usage error") {
  RunResult good =
      run("interp --logic K --atom p --pol pos --quant exists --json "
          "\"[](p & q)\"");
  CHECK(good.status == 0);
  auto j = nlohmann::json::parse(good.out);
  CHECK(j["ok"].get<bool>());
  CHECK(!j["interpolant"].get<std::string>().empty());

  CHECK(run("interp --logic CKCEM --atom p --pol pos \"p > q\"").status == 2);
  CHECK(run("interp --logic CKCEM --atom p --pol plain \"p > q\"").status == 0);
  CHECK(run("interp --logic EC --atom p --pol pos \"[]p\"").status == 2);
  CHECK(run("interp --logic M --atom p --pol neg \"p\"").status == 0);
}

TEST_CASE("craig search distinguishes K from EC") {
  CHECK(run("craig --logic EC --bound 3 \"[](~q & r)\" \"[](p & q) -> "
            "[]false\"").status == 1);
  RunResult k = run(
      "craig --logic K --bound 3 --json \"[](~q & r)\" \"[](p & q) -> "
      "[]false\"");
  CHECK(k.status == 0);
  auto j = nlohmann::json::parse(k.out);
  CHECK(j["found"].get<bool>());
}

TEST_CASE("check and cutelim round trip proof records") {
  RunResult proved = run("prove --logic K --json \"[]p, []q => [](p & q)\"");
  REQUIRE(proved.status == 0);
  auto j = nlohmann::json::parse(proved.out);
  std::string proof = j["proof"].dump();

  CHECK(run("check --logic K", proof).status == 0);
  CHECK(run("check --logic M", proof).status == 1);  // MC is not a rule of GM

  std::string cutProof =
      "{\"rule\":\"Cut\",\"sequent\":\"p => p\",\"premises\":["
      "{\"rule\":\"Ax\",\"sequent\":\"p => p\",\"premises\":[]},"
      "{\"rule\":\"Ax\",\"sequent\":\"p => p\",\"premises\":[]}]}";
  CHECK(run("check --logic K", cutProof).status == 1);
  CHECK(run("check --logic K --allow-cut", cutProof).status == 0);
  RunResult elim = run("cutelim --logic K --json", cutProof);
  CHECK(elim.status == 0);
  auto e = nlohmann::json::parse(elim.out);
  CHECK(e["rule"].get<std::string>() != "Cut");
}

TEST_CASE("selftest filter runs deterministically") {
  RunResult a = run("selftest --seed 7 --only c1");
  RunResult b = run("selftest --seed 7 --only c1");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("c1.axioms: PASS") != std::string::npos);
}

TEST_CASE("rule registry dump") {
  RunResult r = run("--dump-rules");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.is_array());
}
