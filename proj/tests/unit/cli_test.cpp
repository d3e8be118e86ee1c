#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "symconn/cli.hpp"

using namespace symconn;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string model(const std::string& name) {
  return std::string(SYMCONN_MODELS_DIR) + "/" + name + ".spec";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify on the Kodaira-Thurston file") {
  const Run r = run({"verify", model("kodaira_thurston"), "--vector", "E2", "--beta", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("affine automorphism: yes") != std::string::npos);
  CHECK(r.out.find("dX_flat = -e2^e4") != std::string::npos);
  CHECK(r.out.find("nilpotency index: 2") != std::string::npos);

  const Run all = run({"verify", model("kodaira_thurston"), "--beta", "1/3"});
  CHECK(all.code == 0);
  CHECK(all.out.find("some automorphisms are not symplectic") != std::string::npos);
}

TEST_CASE("machine output is JSON") {
  const Run r = run({"verify", model("kodaira_thurston"), "--vector", "E2", "--vector", "E1",
                     "--beta", "0", "--format", "machine"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["vector"] == "E2");
  CHECK(j[0]["is_affine_automorphism"] == true);
  CHECK(j[0]["is_symplectic"] == false);
  CHECK(j[0]["nilpotency_index"] == 2);
  CHECK(j[0]["image_lagrangian"] == true);
  CHECK(j[1]["is_symplectic"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", model("torsionful")}).code == kExitSemantic);
  CHECK(run({"verify", model("torsionful")}).err.find("torsion") != std::string::npos);
  // E2's endomorphism is independent of beta, the automorphism space is not
  CHECK(run({"verify", model("kodaira_thurston"), "--vector", "E2"}).code == kExitOk);
  CHECK(run({"verify", model("kodaira_thurston"), "--all-invariant"}).code == kExitSemantic);
  CHECK(run({"verify", "/nonexistent.spec"}).code == kExitParse);
  CHECK(run({"verify", model("darboux1"), "--vector", "Y"}).code == kExitParse);
  CHECK(run({"verify", model("darboux1"), "--all-invariant", "--vector", "E1"}).code ==
        kExitParse);
  CHECK(run({"frobnicate"}).code == kExitParse);
  CHECK(run({"export", "nothing"}).code == kExitParse);
  CHECK(run({"verify", model("darboux2"), "--all-invariant"}).code == kExitOk);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("moduli and holonomy") {
  const Run m = run({"moduli", model("darboux1")});
  CHECK(m.code == 0);
  CHECK(m.out.find("dimension: 4") != std::string::npos);
  const Run kt = run({"moduli", model("kodaira_thurston")});
  CHECK(kt.out.find("file connection in space: parameter-dependent") != std::string::npos);
  const Run h = run({"holonomy", model("kodaira_thurston"), "--beta", "2"});
  CHECK(h.code == 0);
  CHECK(h.out.find("generators: 0 (flat)") != std::string::npos);
}

TEST_CASE("built-in example and file round trips") {
  const Run sym = run({"paper-example", "--symbolic"});
  CHECK(sym.code == 0);
  CHECK(sym.out.find("all identities verified") != std::string::npos);
  CHECK(sym.out.find("[FAIL]") == std::string::npos);
  CHECK(run({"paper-example", "--beta", "-1/3"}).code == 0);

  const Run exported = run({"export", "kodaira_thurston"});
  CHECK(exported.code == 0);
  const Run canon = run({"canonicalize", model("kodaira_thurston")});
  CHECK(canon.code == 0);
  CHECK(canon.out == exported.out);
}

}  // TEST_SUITE
