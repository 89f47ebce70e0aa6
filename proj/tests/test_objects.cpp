#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tautilt/objects.hpp"
#include "tautilt/verify.hpp"

using namespace tautilt;

TEST_CASE("named objects") {
  ModuleCategory c(compile_text(builtin_algebra("Lambda2")));
  const ShiftedObject u = parse_object(c, "P(1) + S(2)[1]+I(3)");
  REQUIRE(u.size() == 3);
  CHECK(parse_object(c, "0").empty());
  CHECK(parse_object(c, "  ").empty());
  CHECK(parse_object(c, "S(3)") == parse_object(c, "P(3)"));
  CHECK(describe(c, parse_object(c, "P(2)[1]")) == "P(2)[1]");
  CHECK_THROWS_AS(parse_object(c, "Q(1)"), InputError);
  CHECK_THROWS_AS(parse_object(c, "P(4)"), InputError);
  CHECK_THROWS_AS(parse_object(c, "P(1) +"), InputError);
}

TEST_CASE("module JSON round trip") {
  Rng rng(0);
  ModuleCategory c(compile_text(builtin_algebra("Ex48")));
  const Rep x = parse_module_json(c.algebra_ptr(), R"({"dims":[1,1,1],"arrows":{"a1":[[1]],"b1":[["1/2"]]}})");
  CHECK(x.dims == std::vector<int>{1, 1, 1});
  const Rep y = parse_module_json(c.algebra_ptr(), module_to_json(x));
  CHECK(y.action == x.action);
  CHECK(module_to_json(x).find("\"1/2\"") != std::string::npos);
  // the relation b2*a1 must hold
  CHECK_THROWS(parse_module_json(c.algebra_ptr(), R"({"dims":[1,1,1],"arrows":{"a1":[[1]],"b2":[[1]]}})"));
  CHECK_THROWS_AS(parse_module_json(c.algebra_ptr(), R"({"dims":[1,1,1],"arrows":{"zz":[[1]]}})"), InputError);
  CHECK_THROWS_AS(parse_module_json(c.algebra_ptr(), "{"), InputError);
}

TEST_CASE("JSON objects are decomposed and shifted") {
  ModuleCategory c(compile_text(builtin_algebra("A3")));
  const std::string sum = R"({"dims":[1,1,1],"arrows":{"a":[[0]],"b":[[1]]}})";
  const ShiftedObject u = parse_object(c, sum);
  CHECK(u == parse_object(c, "S(1) + P(2)"));
  const std::string arr = R"([{"module":{"dims":[1,0,0]},"shift":0},{"module":{"dims":[0,0,1]},"shift":1}])";
  CHECK(parse_object(c, arr) == parse_object(c, "S(1) + P(3)[1]"));
}
