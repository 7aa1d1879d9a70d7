#include <doctest.h>

#include <fstream>

#include "gallai/document.hpp"
#include "support/cli_harness.hpp"

using namespace gallai;
using testing::run_cli;
using testing::slurp;

TEST_CASE("check exit codes and report") {
  auto r = run_cli({"check", "1,2,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("feasible") != std::string::npos);

  r = run_cli({"check", "2,2,2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("first violation at k = 1") != std::string::npos);
  CHECK(r.out.find("-1") != std::string::npos);

  CHECK(run_cli({"check", "2,1"}).code == 2);
  CHECK(run_cli({"check", "1,-1"}).code == 2);
  CHECK(run_cli({"check", "abc"}).code == 2);
  CHECK(run_cli({"check", "0,1"}).code == 2);
  CHECK(run_cli({"check"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);

  r = run_cli({"check", "--quiet", "1,2,2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("construct then verify") {
  testing::ScratchDir dir;
  const auto doc = dir.file("k4.json");
  const auto dot = dir.file("k4.dot");
  auto r = run_cli({"construct", "2,2,2,2", "-o", doc, "--dot", dot});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("degrees 2,2,2,2") != std::string::npos);
  const auto coloring = read_document_file(doc);
  CHECK(coloring.edge_count() == 6);
  CHECK(slurp(dot) == write_dot(coloring));

  r = run_cli({"verify", doc});
  CHECK(r.code == 0);
  CHECK(r.out.find("sorted 2,2,2,2") != std::string::npos);
  CHECK(r.out.find("gallai\n") != std::string::npos);

  const auto one = dir.file("k2.json");
  REQUIRE(run_cli({"construct", "1,1", "-o", one}).code == 0);
  CHECK(read_document_file(one).edge_count() == 1);

  r = run_cli({"construct", "1,1,3,3", "-o", dir.file("bad.json")});
  CHECK(r.code == 1);
  CHECK(r.out.find("first violation at k = 3") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(dir.file("bad.json")));

  CHECK(run_cli({"construct", "1,2,2"}).code == 2);  // -o required
  CHECK(run_cli({"construct", "1,2,2", "-o", dir.file("no/such/dir.json")})
            .code == 2);
}

TEST_CASE("verify reports rainbow triangles and malformed files") {
  testing::ScratchDir dir;
  const auto rainbow = dir.file("rainbow.json");
  std::ofstream(rainbow) << write_document(
      EdgeColoring(3, std::vector<Color>{0, 1, 2}));
  auto r = run_cli({"verify", rainbow});
  CHECK(r.code == 1);
  CHECK(r.out.find("rainbow triangle (0, 1, 2)") != std::string::npos);

  const auto missing = dir.file("missing.json");
  std::ofstream(missing)
      << R"({"n": 3, "edges": [{"u": 0, "v": 1, "color": 0}]})";
  CHECK(run_cli({"verify", missing}).code == 2);
  CHECK(run_cli({"verify", dir.file("absent.json")}).code == 2);
}

TEST_CASE("generate") {
  testing::ScratchDir dir;
  const auto path = dir.file("u3.json");
  auto r = run_cli({"generate", "uniform", "3", "-o", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("degrees 3,3,3,3,3,3,3,3") != std::string::npos);
  CHECK(run_cli({"verify", path}).code == 0);

  r = run_cli({"generate", "chain", "5", "-o", dir.file("c5.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("degrees 1,2,3,4,4") != std::string::npos);

  CHECK(run_cli({"generate", "uniform", "13", "-o", path}).code == 2);
  CHECK(run_cli({"generate", "chain", "0", "-o", path}).code == 2);
  CHECK(run_cli({"generate", "chain", "5000", "-o", path}).code == 2);
  CHECK(run_cli({"generate", "spiral", "3", "-o", path}).code == 2);
}

TEST_CASE("crosscheck") {
  auto r = run_cli({"crosscheck", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4 Gallai colorings, 2 realizable sequences, 2 feasible") !=
        std::string::npos);
  CHECK(run_cli({"crosscheck", "6"}).code == 2);
  CHECK(run_cli({"crosscheck", "--allow-large", "6"}).code == 0);
  CHECK(run_cli({"crosscheck", "7"}).code == 2);
  CHECK(run_cli({"crosscheck", "--allow-large", "7"}).code == 2);
  CHECK(run_cli({"crosscheck", "0"}).code == 2);
}

TEST_CASE("partition") {
  testing::ScratchDir dir;
  const auto mono = dir.file("mono.json");
  std::ofstream(mono) << write_document(EdgeColoring(3, 0));
  auto r = run_cli({"partition", mono});
  CHECK(r.code == 0);
  CHECK(r.out.find("parts 2") != std::string::npos);

  const auto u2 = dir.file("u2.json");
  REQUIRE(run_cli({"generate", "uniform", "2", "-o", u2}).code == 0);
  r = run_cli({"partition", u2});
  CHECK(r.code == 0);
  CHECK(r.out.find("cross colors 1\n") != std::string::npos);

  const auto rainbow = dir.file("rainbow.json");
  std::ofstream(rainbow) << write_document(
      EdgeColoring(3, std::vector<Color>{0, 1, 2}));
  CHECK(run_cli({"partition", rainbow}).code == 1);

  const auto big = dir.file("big.json");
  std::ofstream(big) << write_document(EdgeColoring(11, 0));
  CHECK(run_cli({"partition", big}).code == 2);
}

TEST_CASE("outputs are byte-stable") {
  testing::ScratchDir dir;
  const auto a = dir.file("a.json");
  const auto b = dir.file("b.json");
  const auto r1 = run_cli({"construct", "1,2,3,3,3,4,4", "-o", a, "--dot", a + ".dot"});
  const auto r2 = run_cli({"construct", "1,2,3,3,3,4,4", "-o", b, "--dot", b + ".dot"});
  REQUIRE(r1.code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a + ".dot") == slurp(b + ".dot"));
  CHECK(run_cli({"check", "1,2,3,3,3,4,4"}).out ==
        run_cli({"check", "1,2,3,3,3,4,4"}).out);
}
