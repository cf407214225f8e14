#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

std::string cli_path() {
  const char* env = std::getenv("HECSBOX_BIN");
  REQUIRE_MESSAGE(env != nullptr, "HECSBOX_BIN must point at the CLI binary");
  return env;
}

RunResult run(const std::string& args) {
  const std::string command = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.stdout_text.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const char* kExample2Generate = "generate --preset example2 --key 0xB";

}  // namespace

TEST_CASE("generate with the example2 preset") {
  RunResult r = run(std::string(kExample2Generate) + " --format json");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j["sbox"].get<std::string>() == "170B9E4328CF65AD");
  CHECK(j["table"].size() == 16);
  CHECK(j["metadata"]["key"] == "11");
  CHECK(j["metadata"]["fold_rule"] == "weight2-coeff");

  // byte-identical across invocations
  RunResult again = run(std::string(kExample2Generate) + " --format json");
  CHECK(again.exit_code == 0);
  CHECK(again.stdout_text == r.stdout_text);

  // JSON output round-trips through parse + dump
  CHECK(Json::parse(r.stdout_text).dump(2) + "\n" == r.stdout_text);
}

TEST_CASE("table and csv formats are deterministic") {
  RunResult table = run(kExample2Generate);
  REQUIRE(table.exit_code == 0);
  CHECK(table.stdout_text.find("sbox: 170B9E4328CF65AD") != std::string::npos);
  CHECK(run(kExample2Generate).stdout_text == table.stdout_text);

  RunResult csv = run(std::string(kExample2Generate) + " --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.stdout_text.rfind("index,value\n", 0) == 0);
  CHECK(csv.stdout_text.find("\r") == std::string::npos);  // LF only
}

TEST_CASE("config errors exit with 2 and name the field") {
  CHECK(run("generate --prime 12q --f 3,1,2,0,0,1 --key 1").exit_code == 2);
  CHECK(run("generate --preset example2").exit_code == 2);            // key required
  CHECK(run("generate --preset example2 --key 16").exit_code == 2);   // needs --wide-key
  CHECK(run("generate --preset example2 --key -3").exit_code == 2);
  CHECK(run("generate --prime 15 --f 3,1,2,0,0,1 --key 1").exit_code == 2);  // composite
  CHECK(run("generate --key 1").exit_code == 2);                      // no curve
  CHECK(run("family --preset example2 --key 1 --family 17").exit_code == 2);
  CHECK(run("family --preset example2 --key 1 --family 0").exit_code == 2);
  CHECK(run("analyze 00000000000000ZZ").exit_code == 2);
  CHECK(run("analyze C56B90AD3EF8471").exit_code == 2);
  CHECK(run("generate --preset example2 --key 1 --format yaml").exit_code == 2);
  CHECK(run("generate --preset example1 --key 1 --mults 1,2,3").exit_code == 2);
  // genus/f-degree mismatch
  CHECK(run("curve-info --prime 11 --genus 2 --f 3,1,2,1").exit_code == 2);
}

TEST_CASE("degenerate configurations exit with 3") {
  // On example1 the divisor of find_point(curve, 0) has order 29, so key 28
  // drives (key+1)*D_m to the identity.
  RunResult r = run("generate --preset example1 --points 0 --key 28 --wide-key");
  CHECK(r.exit_code == 3);
}

TEST_CASE("wide keys are accepted when requested") {
  RunResult r = run("generate --preset example2 --key 0x1234 --wide-key --format json");
  CHECK(r.exit_code == 0);
}

TEST_CASE("family command") {
  RunResult r = run("family --preset example2 --key 0xB --family 16 --format json");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  REQUIRE(j["family"].size() == 16);
  CHECK(j["family"][0]["sbox"] == "170B9E4328CF65AD");

  // the rotation law, spot-checked through the wire format
  const std::string first = j["family"][0]["sbox"].get<std::string>();
  const std::string second = j["family"][1]["sbox"].get<std::string>();
  CHECK(second == first.substr(1) + first[0]);

  // N = 1 matches generate
  RunResult one = run("family --preset example2 --key 0xB --family 1 --format json");
  Json j1 = Json::parse(one.stdout_text);
  CHECK(j1["family"].size() == 1);
  CHECK(j1["family"][0]["sbox"] == "170B9E4328CF65AD");

  RunResult analyzed = run("family --preset example2 --key 0xB --family 3 --analyze --format json");
  Json j3 = Json::parse(analyzed.stdout_text);
  for (const auto& entry : j3["family"]) {
    CHECK(entry["analysis"]["bijective"] == true);
  }
}

TEST_CASE("analyze command") {
  RunResult r = run("analyze C56B90AD3EF84712 --format json");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j["sbox"] == "C56B90AD3EF84712");
  CHECK(j["bijective"] == true);
  CHECK(j["nonlinearity"] == 4);
  CHECK(j["algebraic_degree"] == 3);
  CHECK(j["differential_uniformity"] == 4);

  RunResult identity = run("analyze 0123456789ABCDEF --format json");
  Json ji = Json::parse(identity.stdout_text);
  CHECK(ji["bijective"] == true);
  CHECK(ji["nonlinearity"] == 0);

  RunResult csv = run("analyze C56B90AD3EF84712 --format csv");
  CHECK(csv.stdout_text.rfind("metric,value\n", 0) == 0);
  CHECK(csv.stdout_text.find("nonlinearity,4\n") != std::string::npos);
}

TEST_CASE("compare command") {
  RunResult csv = run("compare --preset example2 --key 0xB --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.stdout_text.rfind("metric,generated,reference\n", 0) == 0);
  CHECK(csv.stdout_text.find("nonlinearity,") != std::string::npos);
  CHECK(csv.stdout_text.find(",C56B90AD3EF84712\n") != std::string::npos);

  RunResult j = run("compare --preset example2 --key 0xB --format json");
  REQUIRE(j.exit_code == 0);
  Json parsed = Json::parse(j.stdout_text);
  CHECK(parsed["reference"]["sbox"] == "C56B90AD3EF84712");
  CHECK(parsed["reference"]["nonlinearity"] == 4);
  CHECK(parsed.contains("delta"));

  CHECK(run("compare --preset example1 --points 0 --key 28 --wide-key").exit_code == 3);
}

TEST_CASE("curve-info command") {
  RunResult r = run("curve-info --preset example1 --format json");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j["prime"] == "11");
  CHECK(j["genus"] == 2);
  CHECK(j["affine_points"] == 12);
  CHECK(j["jacobian_order"] == 145);
  CHECK(j["nonsingularity_verified"] == true);

  RunResult big = run("curve-info --preset example2 --format json");
  Json jb = Json::parse(big.stdout_text);
  CHECK(jb["nonsingularity_verified"] == false);
  CHECK_FALSE(jb.contains("affine_points"));
  CHECK_FALSE(jb.contains("jacobian_order"));
}

TEST_CASE("config file with flag overrides") {
  const std::string path = "hecsbox_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"preset": "example2", "key": "1", "format": "json"})";
  }
  RunResult from_file = run("generate --config " + path);
  REQUIRE(from_file.exit_code == 0);
  Json j = Json::parse(from_file.stdout_text);
  CHECK(j["metadata"]["key"] == "1");

  // explicit flag beats the file
  RunResult overridden = run("generate --config " + path + " --key 0xB");
  Json jo = Json::parse(overridden.stdout_text);
  CHECK(jo["metadata"]["key"] == "11");
  CHECK(jo["sbox"] == "170B9E4328CF65AD");

  CHECK(run("generate --config no_such_file.json --key 1").exit_code == 2);
  std::remove(path.c_str());
}
