#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyset/cli.hpp"
#include "cyset/germ.hpp"
#include "oracles.hpp"

using namespace cyset;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CYSET_TEST_DATA) + "/" + name; }

std::string temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("cyset_cli_" + name);
  std::filesystem::remove(p);
  return p.string();
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"delta", data("ex1.cys"), "--k", "0"}).code == 2);
  CHECK(run({"gcd", data("ex1.cys"), "--a", "1", "--b", "2", "--side", "up"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("validate") {
  auto r = run({"validate", data("ex1.cys")});
  CHECK(r.code == 0);
  CHECK(r.out == "Valid\n");

  const auto bad = temp_path("bad.cys");
  std::ofstream(bad) << "3\n2 1 3\n1 2 3\n1 2 3\n";
  r = run({"validate", bad});
  CHECK(r.code == 1);
  CHECK(has(r.out, "Invalid (witness"));

  const auto garbage = temp_path("garbage.cys");
  std::ofstream(garbage) << "2\n1 1\n1 2\n";
  r = run({"validate", garbage});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("ERR NotAPermutation: ", 0) == 0);

  r = run({"validate", temp_path("missing.cys")});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("ERR ", 0) == 0);
}

TEST_CASE("info and class") {
  auto r = run({"info", data("ex1.cys")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "n=4\n"));
  CHECK(has(r.out, "T=(12)"));
  CHECK(has(r.out, "class=2\n"));
  r = run({"class", data("exdec.cys")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "d=6\n"));
  CHECK(has(r.out, "checks=pass"));
}

TEST_CASE("pi and equal") {
  auto r = run({"pi", data("ex1.cys"), "--word", "1,2,3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "pi=(1,1,3)\n"));
  CHECK(has(r.out, "cp=(2,0,1,0)\n"));
  CHECK(has(r.out, "lambda=3\n"));
  r = run({"pi", data("ex1.cys"), "--word", "1,9"});
  CHECK(r.code == 1);
  CHECK(has(r.err, "ERR IndexOutOfRange"));

  const auto t = oracle::table_of(oracle::load("ex1.cys"));
  const auto cls = oracle::rewriting_class(t, {0, 1});
  for (const auto& w : cls) {
    std::string text;
    for (auto x : w) text += (text.empty() ? "" : ",") + std::to_string(x + 1);
    CHECK(run({"equal", data("ex1.cys"), "--w1", "1,2", "--w2", text}).out == "true\n");
  }
  r = run({"equal", data("ex1.cys"), "--w1", "1,2", "--w2", "1,1"});
  CHECK(r.out == "false\n");
  CHECK(r.code == 1);
  CHECK(run({"equal", data("ex1.cys"), "--w1", "1,2,3", "--w2", "3", "--mod-d"}).out == "true\n");
  CHECK(run({"equal", data("ex1.cys"), "--w1", "1,2,3", "--w2", "3"}).out == "false\n");
}

TEST_CASE("lattice operations") {
  const auto f = data("ex1.cys");
  auto r = run({"divides", f, "--a", "1", "--b", "1,2"});
  CHECK(r.out == "true\n");
  CHECK(r.code == 0);
  r = run({"divides", f, "--a", "3", "--b", "1,2"});
  CHECK(r.out == "false\n");
  CHECK(r.code == 1);
  r = run({"gcd", f, "--a", "1,2", "--b", "2"});
  CHECK(r.out == "cp=(0,0,0,0) perm=id\n");
  r = run({"lcm", f, "--a", "cp:1,0,0,0", "--b", "cp:0,1,0,0"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "cp=(1,1,0,0)"));
  r = run({"divides", f, "--a", "cp:-1,0,0,0", "--b", "1"});
  CHECK(r.code == 1);
  CHECK(has(r.err, "ERR NegativeExponent"));
  r = run({"delta", f});
  CHECK(r.out.rfind("cp=(1,1,1,1)", 0) == 0);
  r = run({"delta", f, "--k", "2"});
  CHECK(r.out.rfind("cp=(2,2,2,2)", 0) == 0);
}

TEST_CASE("germ and retract") {
  auto r = run({"germ", data("ex1.cys")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "order=16 expected=16\n"));
  CHECK(has(r.out, "permutation_free=yes\n"));
  r = run({"germ", data("ex1.cys"), "--modulus", "3"});
  CHECK(r.code == 1);
  CHECK(has(r.err, "ERR InvalidModulus"));

  r = run({"retract", data("exdec.cys"), "--k", "3"});
  CHECK(r.code == 0);
  const auto back = parse_cys(r.out);
  CHECK(back == retraction(oracle::load("exdec.cys"), 3));
  CHECK(class_of(back) == 2);
}

TEST_CASE("zappa") {
  auto r = run({"zappa", data("zappa_s1.cys"), data("zappa_s2.cys")});
  CHECK(r.code == 1);
  CHECK(has(r.out, "d1=2 d2=3 u=1 v=2\n"));
  CHECK(has(r.out, "psi(s_1)=(124)(35)\n"));
  CHECK(has(r.out, "psi(s_5)=(354)\n"));
  CHECK(has(r.out, "invalid (witness 1 2 1)\n"));
  r = run({"zappa", data("exdec.cys"), data("exdec.cys")});
  CHECK(r.code == 1);
  CHECK(has(r.err, "ERR NotCoprime"));
}

TEST_CASE("sylow") {
  auto r = run({"sylow", data("exdec.cys"), "--recompose"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "# prime 2 class 2 beta 3\n"));
  CHECK(has(r.out, "# prime 3 class 3 beta 2\n"));
  CHECK(has(r.out, "round trip: exact\n"));
  r = run({"sylow", data("ex1.cys")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "# prime 2 class 2 beta 1\n"));
  const auto trivial = temp_path("trivial.cys");
  std::ofstream(trivial) << format_cys(CycleSet::trivial(3));
  r = run({"sylow", trivial});
  CHECK(r.code == 1);
  CHECK(has(r.err, "ERR TrivialClass"));
}

TEST_CASE("census and bounds") {
  auto r = run({"census", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "labeled=12\n"));
  CHECK(has(r.out, "dmax=3\n"));
  CHECK(has(r.out, "violations=0\n"));
  r = run({"census", "--n", "4", "--iso"});
  CHECK(has(r.out, "labeled=168\n"));
  CHECK(has(r.out, "iso=23\n"));
  r = run({"census", "--n", "7"});
  CHECK(r.code == 1);
  CHECK(has(r.err, "ERR CapExceeded"));
  const auto out = temp_path("census3.txt");
  r = run({"census", "--n", "3", "--out", out});
  CHECK(r.code == 0);
  CHECK(parse_cys_blocks(oracle::read_file(out)).size() == 12);
  CHECK(run({"census", "--n", "3", "--out", out}).code == 0);

  r = run({"bounds", "--n", "5"});
  CHECK(r.out == "a_n=6 g_n=6\n");
  r = run({"bounds", "--n", "10"});
  CHECK(r.out == "a_n=" + std::to_string(oracle::max_distinct_product(10)) + " g_n=30\n");
  CHECK(run({"bounds", "--n", "1"}).code == 2);
}
