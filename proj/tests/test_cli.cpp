#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "belyi/json_io.hpp"

using namespace belyi;

namespace {

#ifndef BELYI_CLI_PATH
#define BELYI_CLI_PATH "./belyi"
#endif

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(BELYI_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 512> buf{};
  RunResult r{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (fgets(buf.data(), buf.size(), p)) r.out += buf.data();
  int rc = pclose(p);
  r.status = WEXITSTATUS(rc);
  return r;
}

std::string temp_dessin(const Dessin& D, const std::string& name) {
  std::string path = std::string("/tmp/belyi_test_") + name + ".json";
  std::ofstream out(path);
  out << dessin_to_json(D);
  return path;
}

}  // namespace

TEST_CASE("json round trip is exact") {
  for (const Dessin& D : {build_diamond(), build_star(5), build_j_invariant(),
                          build_double_star(3, 2), build_chebyshev(6)}) {
    Dessin back = dessin_from_json(dessin_to_json(D));
    CHECK(back.degree() == D.degree());
    CHECK(back.sigma0() == D.sigma0());
    CHECK(back.sigma1() == D.sigma1());
    CHECK(back.name() == D.name());
  }
}

TEST_CASE("json validation") {
  CHECK_THROWS_AS((void)dessin_from_json("{"), invalid_input);
  CHECK_THROWS_AS((void)dessin_from_json("{\"degree\": 2}"), invalid_input);
  CHECK_THROWS_AS(
      (void)dessin_from_json("{\"degree\": 2, \"sigma0\": [[1,5]], \"sigma1\": []}"),
      invalid_input);
  CHECK_THROWS_AS(
      (void)dessin_from_json("{\"degree\": 2, \"sigma0\": [[1,2],[2,1]], \"sigma1\": []}"),
      invalid_input);
  // non-transitive pair
  CHECK_THROWS_AS((void)dessin_from_json("{\"degree\": 2, \"sigma0\": [], \"sigma1\": []}"),
                  invalid_input);
}

TEST_CASE("cli info and geodesic commands") {
  std::string diamond = temp_dessin(build_diamond(), "diamond");
  auto info = run_cli("info " + diamond);
  CHECK(info.status == 0);
  CHECK(info.out.find("degree: 12") != std::string::npos);
  CHECK(info.out.find("genus: 1") != std::string::npos);

  auto word = run_cli("geodesic word 1 1");
  CHECK(word.status == 0);
  CHECK(word.out == "B a\n");

  auto len = run_cli("geodesic length " + diamond + " 2 5 -- -1");
  CHECK(len.status == 0);
  CHECK(len.out.find("3*sqrt(21)") != std::string::npos);
  CHECK(len.out.find("13.7477") != std::string::npos);

  auto sigma = run_cli("geodesic sigma " + diamond + " 10 1");
  CHECK(sigma.status == 0);
  CHECK(sigma.out.find("(1 8 5 2 12 11 6)") != std::string::npos);
  CHECK(sigma.out.find("(7)") != std::string::npos);
}

TEST_CASE("cli sum pipes a dessin") {
  std::string s3 = temp_dessin(build_star(3), "star3");
  std::string s2 = temp_dessin(build_star(2), "star2");
  auto sum = run_cli("sum " + s3 + " 1 " + s2 + " 1");
  CHECK(sum.status == 0);
  Dessin D = dessin_from_json(sum.out);
  CHECK(D.degree() == 4);
  CHECK(dessins_conjugate(D, build_star(4)).has_value());
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("info /nonexistent/file.json").status == 2);
  std::string bad = "/tmp/belyi_test_bad.json";
  {
    std::ofstream out(bad);
    out << "{not json";
  }
  CHECK(run_cli("info " + bad).status == 2);
  std::string s3 = temp_dessin(build_star(3), "star3b");
  CHECK(run_cli("sum " + s3 + " 9 " + s3 + " 1").status == 2);  // invalid edge
  CHECK(run_cli("geodesic word 1 2").status == 2);              // line meets lattice
}

TEST_CASE("cli emit dot") {
  std::string s3 = temp_dessin(build_star(3), "star3c");
  auto dot = run_cli("emit " + s3 + " --dot -");
  CHECK(dot.status == 0);
  CHECK(dot.out.find("fillcolor=white") != std::string::npos);
  CHECK(dot.out.find("fillcolor=black") != std::string::npos);
  // one white vertex, three black ones
  size_t whites = 0, blacks = 0, pos = 0;
  while ((pos = dot.out.find("w", pos)) != std::string::npos) ++pos, ++whites;
  (void)whites;
  pos = 0;
  while ((pos = dot.out.find(" b", pos)) != std::string::npos) ++pos, ++blacks;
  CHECK(blacks >= 3);
}

TEST_CASE("cli modulus and torus") {
  auto torus = run_cli("torus --basis 1 0 0 1");
  CHECK(torus.status == 0);
  std::string path = "/tmp/belyi_test_hexq.json";
  {
    std::ofstream out(path);
    out << torus.out;
  }
  auto mod = run_cli("modulus " + path);
  CHECK(mod.status == 0);
  CHECK(mod.out.find("1/2+1/2sqrt(-3)") != std::string::npos);
  // cone points produce a clean input error
  std::string diamond = temp_dessin(build_diamond(), "diamond2");
  CHECK(run_cli("modulus " + diamond).status == 2);
}

TEST_CASE("cli surgery and peel commands") {
  std::string j = temp_dessin(build_j_invariant(), "jinv");
  auto sub = run_cli("subdivide " + j);
  CHECK(sub.status == 0);
  CHECK(dessin_from_json(sub.out).degree() == 36);

  auto starred = run_cli("star face " + j + " 1");
  CHECK(starred.status == 0);
  CHECK(dessin_from_json(starred.out).degree() == 7);

  auto edged = run_cli("star edge " + j + " 1 --type 1i");
  CHECK(edged.status == 0);
  CHECK(dessin_from_json(edged.out).degree() == 7);

  auto flipped = run_cli("flip " + j + " 2");
  CHECK(flipped.status == 0);
  CHECK(dessin_from_json(flipped.out).degree() == 6);

  auto peel = run_cli("peel " + j + " --json");
  CHECK(peel.status == 0);
  CHECK(peel.out.find("betti1=0") != std::string::npos);
  CHECK(peel.out.find("all in Gamma(2)") != std::string::npos);
  CHECK(peel.out.find("\"pairs\"") != std::string::npos);

  auto wjson = run_cli("geodesic word 1 1 --json");
  CHECK(wjson.status == 0);
  CHECK(wjson.out.find("\"word\": \"B a\"") != std::string::npos);

  auto svg = run_cli("emit " + j + " --svg-peel -");
  CHECK(svg.status == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);

  auto json = run_cli("emit " + j + " --json -");
  CHECK(json.status == 0);
  CHECK(dessin_from_json(json.out).degree() == 6);
}
