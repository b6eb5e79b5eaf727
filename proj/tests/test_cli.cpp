#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "repvar/algebra_io.hpp"
#include "repvar/errors.hpp"
#include "repvar/report.hpp"

using namespace repvar;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(REPVAR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return CliResult{WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
  return std::string(REPVAR_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("algebra parsing") {
  TruncatedAlgebra a = load_algebra_file(fixture("two_vertex_cycle.alg"));
  CHECK(a.quiver.n == 2);
  CHECK(a.quiver.arrows.size() == 5);
  CHECK(a.loewy_bound == 3);

  CHECK_NOTHROW(parse_algebra("vertices: 0\nloewy_bound: 0\n"));

  SUBCASE("unknown vertex") {
    try {
      parse_algebra("vertices: 2\narrow a: 1 -> 9\nloewy_bound: 1\n");
      CHECK(false);
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(std::string(e.what()).find("unknown vertex") !=
            std::string::npos);
    }
  }
  SUBCASE("duplicate arrow name") {
    CHECK_THROWS_AS(
        parse_algebra(
            "vertices: 2\narrow a: 1 -> 2\narrow a: 2 -> 1\nloewy_bound: 1\n"),
        ParseError);
  }
  SUBCASE("negative loewy bound") {
    CHECK_THROWS_AS(
        parse_algebra("vertices: 2\narrow a: 1 -> 2\nloewy_bound: -1\n"),
        ParseError);
  }
  SUBCASE("round trip through format_algebra") {
    TruncatedAlgebra b = parse_algebra(format_algebra(a));
    CHECK(b == a);
  }
}

TEST_CASE("layering text round trip") {
  TruncatedAlgebra a = load_algebra_file(fixture("four_vertex_cycle.alg"));
  for (const std::string text :
       {"1:1;2:1;3:1;4:1", "1:1,3:1;2:1,4:1;;", "1:1,2:1;3:1;;4:1"}) {
    SemisimpleSequence s = parse_layering(text, a.quiver.n, a.loewy_bound);
    CHECK(parse_layering(layering_to_string(s), a.quiver.n, a.loewy_bound) ==
          s);
  }
  CHECK_THROWS_AS(parse_layering("1:1;2:1", 4, 3), ParseError);
  CHECK_THROWS_AS(parse_layering("9:1;;;", 4, 3), ParseError);
}

TEST_CASE("dim vector parsing") {
  CHECK(parse_dim_vector("2,2", 2) == DimVector({2, 2}));
  CHECK(parse_dim_vector("10", 1) == DimVector({10}));
  CHECK_THROWS_AS(parse_dim_vector("1,2,3", 2), ParseError);
  CHECK_THROWS_AS(parse_dim_vector("1,x", 2), ParseError);
}

TEST_CASE("cli socle-layering") {
  CliResult r = run_cli("socle-layering --algebra " +
                        fixture("four_vertex_cycle.alg") +
                        " --layering \"1:1;2:1;3:1;4:1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4:1;3:1;2:1;1:1\n");
}

TEST_CASE("cli radical-layering-hereditary") {
  CliResult r = run_cli("radical-layering-hereditary --algebra " +
                        fixture("kronecker.alg") + " --dim 2,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1:2;2:2\n");
}

TEST_CASE("cli components on the local fixture") {
  CliResult r = run_cli("components --algebra " + fixture("local_r3_L2.alg") +
                        " --dim 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("irreducible components: 17") != std::string::npos);
}

TEST_CASE("cli canon-decomp and subdims on the Kronecker fixture") {
  CliResult r = run_cli("canon-decomp --quiver " + fixture("kronecker.alg") +
                        " --dim 2,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("(1,1)x2") != std::string::npos);
  CHECK(r.out.find("mu = 2") != std::string::npos);
  CHECK(r.out.find("no dense orbit") != std::string::npos);

  CliResult s = run_cli("subdims --quiver " + fixture("kronecker.alg") +
                        " --dim 2,2");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("(1,1)") != std::string::npos);
  CHECK(s.out.find("(1,0)") == std::string::npos);
}

TEST_CASE("cli structured output is byte-identical across runs") {
  std::string args = "components --algebra " +
                     fixture("four_vertex_cycle.alg") +
                     " --dim 1,1,1,1 --seed 7 --format structured";
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"seed\": 7") != std::string::npos);
  CHECK(a.out.find("\"component_count\": 2") != std::string::npos);

  // a different seed still fixes the same components
  CliResult c = run_cli("components --algebra " +
                        fixture("four_vertex_cycle.alg") +
                        " --dim 1,1,1,1 --seed 8 --format structured");
  CHECK(c.out.find("\"component_count\": 2") != std::string::npos);
}

TEST_CASE("cli error paths") {
  CliResult missing = run_cli("components --algebra /nonexistent.alg --dim 1");
  CHECK(missing.exit_code == 1);
  CliResult bad_dim = run_cli("components --algebra " +
                              fixture("kronecker.alg") + " --dim 1,2,3");
  CHECK(bad_dim.exit_code == 1);
  CliResult bad_cmd = run_cli("frobnicate --algebra x");
  CHECK(bad_cmd.exit_code != 0);
}

TEST_CASE("cli gamma") {
  CliResult r = run_cli("gamma --algebra " + fixture("two_vertex_cycle.alg") +
                        " --layering \"1:2;2:2;;\" --small-prime 101");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Gamma = ") != std::string::npos);
}
