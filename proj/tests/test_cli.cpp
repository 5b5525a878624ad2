#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Result {
  int status = -1;
  std::string out;
};

/// Runs the CLI with `args`, capturing stdout. stderr is discarded.
Result run(const std::string& args) {
  const std::string command = std::string(KMROOTS_CLI) + " " + args + " 2>/dev/null";
  Result result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("mult") {
  const auto r = run("mult --r 3 --root 16,15 --json");
  REQUIRE(r.status == 0);
  const auto j = json_of(r);
  CHECK(j["multiplicity"] == "815214");
  CHECK(j["class"] == "imaginary");
  CHECK(j["root"] == nlohmann::json::array({"16", "15"}));
}

TEST_CASE("mult CSV") {
  const auto r = run("mult --r 3 --root 4,3 --csv");
  REQUIRE(r.status == 0);
  CHECK(r.out == "root,r,norm,class,multiplicity\n4 3,3,-22,imaginary,4\n");
}

TEST_CASE("bound lists the (4,3) paths") {
  const auto r = run("bound --r 3 --root 4,3 --theorem 1 --list --json");
  REQUIRE(r.status == 0);
  const auto j = json_of(r);
  CHECK(j["bound"] == "4");
  CHECK(j["dyck_total"] == "5");
  CHECK(j["paths"] ==
        nlohmann::json::array({"1110000", "1100100", "1011000", "1010100"}));
}

TEST_CASE("staircase table matches the golden file") {
  const auto r = run("table --r 3 --family staircase --max-n 6 --csv");
  REQUIRE(r.status == 0);
  CHECK(r.out == slurp(std::string(KMROOTS_GOLDEN_DIR) + "/staircase_r3_n6.csv"));
}

TEST_CASE("estimate output does not depend on the thread count") {
  const std::string base = "estimate --r 3 --root 16,15 --theorem 2 --samples 40000 "
                           "--seed 0x2a --chunk 5000 --json";
  const auto one = run(base + " --threads 1");
  const auto four = run(base + " --threads 4");
  REQUIRE(one.status == 0);
  REQUIRE(four.status == 0);
  CHECK(one.out == four.out);
  CHECK(json_of(one)["seed"] == "42");
}

TEST_CASE("validate") {
  const auto r = run("validate --r 3 --word 1010001 --json");
  REQUIRE(r.status == 0);
  const auto j = json_of(r);
  CHECK(j["littelmann_valid"] == false);
  CHECK(j["runs"] == nlohmann::json::array({"1", "1", "1", "3", "1"}));
}

TEST_CASE("stats") {
  const auto r = run("stats --k 1 --distance 0 --samples 100 --json");
  REQUIRE(r.status == 0);
  CHECK(json_of(r)["mean"] == "2.00000e+00");
}

TEST_CASE("bad input exits nonzero") {
  CHECK(run("estimate --r 3 --root 4,3 --samples 0").status != 0);
  CHECK(run("estimate --r 3 --root 4,3 --samples -5").status != 0);
  CHECK(run("estimate --r 3 --root 4,3 --samples 1e6").status != 0);
  CHECK(run("estimate --r 3 --root 4,2 --samples 10").status != 0);
  CHECK(run("bound --r 2 --root 4,3").status != 0);
  CHECK(run("bound --r 3 --root 4,3 --theorem 3").status != 0);
  CHECK(run("mult --r 3 --root 0,0").status != 0);
  CHECK(run("mult --r 3 --root x,1").status != 0);
  CHECK(run("validate --r 3 --word 12").status != 0);
  CHECK(run("").status != 0);
}
