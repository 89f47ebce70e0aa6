#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "tautilt/algebra.hpp"
#include "tautilt/verify.hpp"

using namespace tautilt;

namespace {

std::string read_data(const std::string& file) {
  std::ifstream in(std::string(TAUTILT_DATA_DIR) + "/" + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Brute-force associativity and unit laws on the whole basis.
void check_table(const BasedAlgebra& a) {
  const int d = a.dim();
  Vec one(d);
  for (int v = 0; v < a.rank(); ++v) one[v] = 1;
  for (int x = 0; x < d; ++x) {
    Vec ex(d);
    ex[x] = 1;
    CHECK(a.multiply(one, ex) == ex);
    CHECK(a.multiply(ex, one) == ex);
    for (int y = 0; y < d; ++y) {
      Vec ey(d);
      ey[y] = 1;
      for (int z = 0; z < d; ++z) {
        Vec ez(d);
        ez[z] = 1;
        CHECK(a.multiply(a.multiply(ex, ey), ez) == a.multiply(ex, a.multiply(ey, ez)));
      }
    }
  }
}

int parse_error_line(const std::string& text) {
  try {
    compile_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("dimensions of the path algebras") {
  const std::pair<const char*, int> expected[] = {{"a2.alg", 3},     {"a3.alg", 6},        {"a3_rad2.alg", 5},
                                                   {"kxk.alg", 2},    {"kronecker.alg", 4}, {"lambda2.alg", 6},
                                                   {"ex48.alg", 9},   {"square.alg", 9}};
  for (const auto& [file, dim] : expected) {
    CAPTURE(file);
    const AlgebraPtr a = compile_text(read_data(file));
    CHECK(a->dim() == dim);
    check_table(*a);
  }
}

TEST_CASE("data files match the built-in texts") {
  const std::pair<const char*, const char*> pairs[] = {
      {"A2", "a2.alg"},           {"A3", "a3.alg"},           {"A3rad2", "a3_rad2.alg"}, {"KxK", "kxk.alg"},
      {"Kronecker", "kronecker.alg"}, {"Lambda2", "lambda2.alg"}, {"Ex48", "ex48.alg"}};
  for (const auto& [name, file] : pairs) {
    CAPTURE(name);
    CHECK(isomorphic_tables(*compile_text(builtin_algebra(name)), *compile_text(read_data(file))));
  }
}

TEST_CASE("generators are the arrows and products follow composition order") {
  const AlgebraPtr a = compile_text(builtin_algebra("A3"));
  REQUIRE(a->generators().size() == 2);
  const int ia = a->find_label("a"), ib = a->find_label("b");
  REQUIRE(ia >= 0);
  REQUIRE(ib >= 0);
  CHECK(a->basis(ia).source == 0);
  CHECK(a->basis(ia).target == 1);
  // b*a is "a then b": a path 1 -> 3
  const auto& ba = a->product(ib, ia);
  REQUIRE(ba.size() == 1);
  CHECK(a->basis(ba[0].first).source == 0);
  CHECK(a->basis(ba[0].first).target == 2);
  CHECK(a->product(ia, ib).empty());
  CHECK(a->loewy_length() == 3);
}

TEST_CASE("Loewy lengths") {
  CHECK(compile_text(builtin_algebra("A3rad2"))->loewy_length() == 2);
  CHECK(compile_text(builtin_algebra("Kronecker"))->loewy_length() == 2);
  CHECK(compile_text(builtin_algebra("KxK"))->loewy_length() == 1);
}

TEST_CASE("opposite algebra") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const AlgebraPtr a = compile_text(builtin_algebra(name));
    const AlgebraPtr op = opposite(*a);
    check_table(*op);
    CHECK(isomorphic_tables(*opposite(*op), *a));
  }
  // the Kronecker quiver is self-opposite
  const AlgebraPtr k = compile_text(builtin_algebra("Kronecker"));
  CHECK(isomorphic_tables(*opposite(*k), *k));
}

TEST_CASE("isomorphism of tables distinguishes algebras of equal dimension") {
  const AlgebraPtr a3 = compile_text(builtin_algebra("A3"));
  const AlgebraPtr l2 = compile_text(builtin_algebra("Lambda2"));
  REQUIRE(a3->dim() == l2->dim());
  CHECK_FALSE(isomorphic_tables(*a3, *l2));
  // relabelled vertices
  const AlgebraPtr k2 = compile_text("vertices: 2\narrows:\n  x: 2 -> 1\n  y: 2 -> 1\n");
  CHECK(isomorphic_tables(*k2, *compile_text(builtin_algebra("Kronecker"))));
}

TEST_CASE("parse errors carry line and column") {
  CHECK(parse_error_line("vertices: 0\n") == 1);
  CHECK(parse_error_line("vertices: 2\narrows:\n  a: 1 -> 3\n") == 3);
  CHECK(parse_error_line("vertices: 2\narrows:\n  a: 1 -> 2\n  a: 1 -> 2\n") == 4);
  CHECK(parse_error_line("vertices: 2\narrows:\n  a: 1 -> 2\nrelations: a\n") == 4);
  CHECK(parse_error_line("vertices: 3\narrows:\n  a: 1 -> 2\n  b: 2 -> 3\nrelations: a*b\n") == 5);
  CHECK(parse_error_line("arrows:\n") == 1);
  try {
    compile_text("vertices: 2\narrows:\n  a: 1 -> 2\nrelations: b*a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("non-admissible or infinite algebras are rejected") {
  // a loop without relations is infinite dimensional
  CHECK_THROWS_AS(compile_text("vertices: 1\narrows:\n  x: 1 -> 1\n"), AlgebraError);
  // an oriented cycle killed at length two is fine
  CHECK(compile_text("vertices: 1\narrows:\n  x: 1 -> 1\nrelations: x*x\n")->dim() == 2);
}
