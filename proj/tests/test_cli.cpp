#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

int run(const std::string& args) {
  const std::string cmd = std::string(DFTATOMS_BIN) + " " + args;
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

double extract_number(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\":");
  REQUIRE(pos != std::string::npos);
  return std::strtod(text.c_str() + pos + key.size() + 3, nullptr);
}

}  // namespace

TEST_CASE("tf solve reports the reference energy") {
  REQUIRE(run("tf solve --z 1 --out /tmp/dfta_tf.json") == 0);
  const auto text = slurp("/tmp/dfta_tf.json");
  CHECK(std::abs(extract_number(text, "energy_hartree") - (-0.7687)) < 1e-3);
  CHECK(std::abs(extract_number(text, "mass") - 1.0) < 1e-4);
}

TEST_CASE("malformed invocations exit with the usage code") {
  CHECK(run("tf solve --nonsense 2>/dev/null") == 64);
  CHECK(run("2>/dev/null") == 64);
}

TEST_CASE("ed kernels subcommand") {
  REQUIRE(run("ed kernels --t 0.001 --out /tmp/dfta_ed.json") == 0);
  const auto text = slurp("/tmp/dfta_ed.json");
  CHECK(std::abs(extract_number(text, "ttf") / 1e-15 - 0.8) < 1e-4);
}

TEST_CASE("appendix maximal eigenrelation through the CLI") {
  REQUIRE(run("appendix maximal --alpha 1.5 --d 3 --x 0.1 --out "
              "/tmp/dfta_ap1.json") == 0);
  REQUIRE(run("appendix maximal --alpha 1.5 --d 3 --x 10 --out "
              "/tmp/dfta_ap2.json") == 0);
  const double c1 = extract_number(slurp("/tmp/dfta_ap1.json"), "constant");
  const double c2 = extract_number(slurp("/tmp/dfta_ap2.json"), "constant");
  CHECK(std::abs(c1 - c2) <= 1e-3 * c1);
}

TEST_CASE("verify reports are byte-identical for a fixed seed") {
  REQUIRE(run("verify --suite numerics --seed 7 --out /tmp/dfta_v1.json") ==
          0);
  REQUIRE(run("verify --suite numerics --seed 7 --out /tmp/dfta_v2.json") ==
          0);
  const auto a = slurp("/tmp/dfta_v1.json");
  const auto b = slurp("/tmp/dfta_v2.json");
  REQUIRE(!a.empty());
  CHECK(a == b);
  CHECK(a.find("\"schema\":1") != std::string::npos);
  CHECK(a.find("runtime_ms") == std::string::npos);
}

TEST_CASE("verify exit code reflects suite status") {
  CHECK(run("verify --suite appendix --seed 7 --out /tmp/dfta_v3.json") == 0);
}
