#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "conformalk/json_io.hpp"
#include "conformalk/singular.hpp"

using namespace conformalk;

namespace {

int run(const std::string& cmd) {
  int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::string kBin = CONFORMALK_BIN;

}  // namespace

TEST_CASE("weight parsing") {
  SoWeight w = parse_weight(4, "-1;1,0");
  CHECK(w.mu0 == -1);
  CHECK(w.mu[0] == 1);
  CHECK(w.mu[1] == 0);
  CHECK(parse_weight(3, "3/2;1/2").mu[0] == mpq_class(1, 2));
  CHECK_THROWS_AS(parse_weight(4, "1;1"), ParseError);      // missing entry
  CHECK_THROWS_AS(parse_weight(4, "1,1,0"), ParseError);    // no semicolon
  CHECK_THROWS_AS(parse_weight(4, "x;1,0"), ParseError);
  CHECK_THROWS_AS(parse_weight(4, ""), ParseError);
}

TEST_CASE("grid parsing") {
  auto s = parse_grid_slot("0..2");
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 0);
  CHECK(s[2] == 2);
  auto h = parse_grid_slot("0..1:1/2");
  REQUIRE(h.size() == 3);
  CHECK(h[1] == mpq_class(1, 2));
  CHECK(parse_grid_slot("5").size() == 1);
  CHECK_THROWS_AS(parse_grid_slot("2..1"), ParseError);
  // cartesian expansion keeps only valid highest weights
  auto grid = parse_weight_grid(4, "0..1;0..1,0..1");
  for (const auto& w : grid) CHECK(is_dominant_integral(4, w.mu));
  bool has_10 = false;
  for (const auto& w : grid)
    has_10 = has_10 || (w.mu0 == 0 && w.mu[0] == 1 && w.mu[1] == 0);
  CHECK(has_10);
  // (0;0,1) is filtered out, so the grid is strictly smaller than 2^3
  CHECK(grid.size() < 8);
}

TEST_CASE("vector serialization schema") {
  SoWeight w = parse_weight(4, "-1;1,0");
  SoModule F = build_irrep(w);
  InducedVector v = predicted_family_a(F);
  Json j = vector_json(w, v);
  CHECK(j["n"] == 4);
  CHECK(j["basis"] == "dual");
  CHECK(j["mu"][0] == "-1");
  REQUIRE(j["terms"].is_array());
  REQUIRE(!j["terms"].empty());
  const Json& t = j["terms"][0];
  REQUIRE(t.contains("dpow"));
  REQUIRE(t.contains("xi"));
  REQUIRE(t.contains("vecIndex"));
  REQUIRE(t.contains("coeff"));
  CHECK(t["coeff"].is_array());
  CHECK(t["coeff"].size() == 2);
  // xi lists 1-based ascending indices
  for (const Json& term : j["terms"]) {
    int prev = 0;
    for (const Json& ix : term["xi"]) {
      CHECK(ix.get<int>() > prev);
      prev = ix.get<int>();
    }
  }
}

TEST_CASE("stable dumps") {
  Json j;
  j["b"] = 1;
  j["a"] = 2;
  std::string once = dump_stable(j);
  CHECK(once == dump_stable(j));
  CHECK(once.back() == '\n');
  // ordered_json preserves insertion order rather than sorting
  CHECK(once.find("\"b\"") < once.find("\"a\""));
}

TEST_CASE("scalar and weight wire forms") {
  Json s = scalar_json(GaussScalar(mpq_class(0), mpq_class(-1)));
  CHECK(s[0] == "0");
  CHECK(s[1] == "-1");
  Json w = weight_json(parse_weight(3, "3/2;1/2"));
  CHECK(w[0] == "3/2");
  CHECK(w[1] == "1/2");
}

TEST_CASE("cli exit codes") {
  CHECK(run(kBin + " axioms --n 3 --tmax 2") == 0);
  CHECK(run(kBin + " axioms --n 2 --tmax 2") == 2);       // small n needs --force-n
  CHECK(run(kBin + " axioms --n 2 --tmax 2 --force-n") == 0);
  CHECK(run(kBin + " singular --n 4 --mu '1;1,0'") == 0);  // irreducible, still consistent
  CHECK(run(kBin + " singular --n 4 --mu bad") == 2);      // malformed weight
  CHECK(run(kBin + " singular --n 9 --mu '0;0,0,0,0'") == 2);  // guard without override
  CHECK(run(kBin) == 2);                                   // missing subcommand
  CHECK(run(kBin + " rep --n 4 --mu '0;1,2'") == 2);       // non-dominant weight
}

TEST_CASE("cli json reports") {
  std::string path = "/tmp/conformalk_test_singular.json";
  std::string cmd = kBin + " singular --n 4 --mu '-1;1,0' --json " + path;
  CHECK(run(cmd) == 0);
  std::string first = slurp(path);
  Json j = Json::parse(first);
  CHECK(j["command"] == "singular");
  CHECK(j["config"]["n"] == 4);
  CHECK(j.contains("version"));
  REQUIRE(j["report"]["vectors"].is_array());
  CHECK(j["report"]["vectors"].size() == 1);
  CHECK(j["report"]["trivialDim"] == 1);
  CHECK(j["verified"] == true);
  // byte-identical across runs
  CHECK(run(cmd) == 0);
  CHECK(slurp(path) == first);
  std::remove(path.c_str());
}

TEST_CASE("cli config echoes the thread override") {
  std::string path = "/tmp/conformalk_test_axioms.json";
  CHECK(run("CONFORMALK_THREADS=7 " + kBin + " axioms --n 3 --tmax 1 --json " + path) == 0);
  Json j = Json::parse(slurp(path));
  CHECK(j["config"]["threads"] == 7);
  std::remove(path.c_str());
}
