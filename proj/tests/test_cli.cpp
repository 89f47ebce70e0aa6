#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TAUTILT_CLI) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> p(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), p.get())) out += buf.data();
  const int status = pclose(p.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* f) { return std::string(TAUTILT_DATA_DIR) + "/" + f; }

}  // namespace

TEST_CASE("verify rank on A3") {
  const Run r = run("verify rank " + data("a3.alg"));
  CHECK(r.code == 0);
  CHECK(r.out.find("rank formula: 45/45 pairs pass") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify nosuchsuite A3").code == 2);
  CHECK(run("compile /nonexistent.alg").code == 2);
  CHECK(run("--field 9 compile A3").code == 2);
  CHECK(run("--field 5 compile A3").code == 2);  // p must exceed dim A3 = 6
  CHECK(run("--depth -1 mutgraph A3").code == 2);
  CHECK(run("rigid A3 \"P(7)\"").code == 2);
}

TEST_CASE("parse errors report line and column") {
  const std::string path = "cli_bad.alg";
  std::ofstream(path) << "vertices: 2\narrows:\n  a: 1 -> 5\n";
  const Run r = run("compile " + path);
  CHECK(r.code == 2);
  CHECK(r.out.find("line 3, column") != std::string::npos);
}

TEST_CASE("non-rigid input is a verification failure") {
  const Run r = run("rigid A3 \"P(1) + P(1)[1]\"");
  CHECK(r.code == 1);
  CHECK(r.out.find("support τ-rigid: no") != std::string::npos);
}

TEST_CASE("subcommands") {
  Run r = run("compile " + data("lambda2.alg"));
  CHECK(r.code == 0);
  CHECK(r.out.find("P(1) (1,2,0)") != std::string::npos);
  r = run("rigid A3 \"S(2)\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("Bongartz complement") != std::string::npos);
  r = run("jperp Kronecker \"P(2)\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("Filt(S(1))") != std::string::npos);
  r = run("jperp --json Kronecker \"P(2)\"");
  CHECK(r.code == 0);
  r = run("emap A3 \"P(3)\" \"P(2)\"");
  CHECK(r.code == 0);
  r = run("tau Kronecker \"S(1)\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("(3,2)") != std::string::npos);
  r = run("--depth 10 mutgraph A3");
  CHECK(r.out.find("14 support τ-tilting pairs") != std::string::npos);
  r = run("--field 7 --depth 10 mutgraph A3");
  CHECK(r.out.find("14 support τ-tilting pairs") != std::string::npos);
}

TEST_CASE("category export is byte-identical across runs") {
  const Run a = run("category --depth 3 --dot Kronecker");
  const Run b = run("category --depth 3 --dot Kronecker");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("w0 -> w3 [label=\"P(2)\"]") != std::string::npos);
  const Run j = run("category --depth 3 --json Kronecker");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"compositions\"") != std::string::npos);
}
