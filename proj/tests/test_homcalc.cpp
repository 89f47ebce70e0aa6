#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tautilt/homcalc.hpp"
#include "tautilt/objects.hpp"
#include "tautilt/verify.hpp"

using namespace tautilt;

namespace {

AlgebraPtr builtin(const char* name) { return compile_text(builtin_algebra(name)); }

Rep random_module(const AlgebraPtr& a, std::vector<int> dims, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> val(-2, 2);
  std::vector<Mat> acts;
  for (int g : a->generators()) {
    const auto& e = a->basis(g);
    Mat m(dims[e.target], dims[e.source]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
    acts.push_back(std::move(m));
  }
  return from_generators(a, std::move(dims), acts);
}

}  // namespace

TEST_CASE("oracle sanity: Ext^1 between simples counts arrows") {
  const AlgebraPtr k = builtin("Kronecker");
  CHECK(oracle::ext1(simple_rep(k, 0), simple_rep(k, 1)) == 2);
  CHECK(oracle::ext1(simple_rep(k, 1), simple_rep(k, 0)) == 0);
  const AlgebraPtr l = builtin("Lambda2");
  CHECK(oracle::ext1(simple_rep(l, 1), simple_rep(l, 2)) == 1);
  CHECK(oracle::ext1(simple_rep(l, 0), simple_rep(l, 2)) == 0);
}

TEST_CASE("Ext^1 against the cocycle oracle") {
  for (const auto& [name, len] : {std::pair{"A3", 3}, std::pair{"A3rad2", 2}}) {
    const AlgebraPtr a = builtin(name);
    const auto ind = oracle::intervals(a, len);
    for (const Rep& x : ind)
      for (const Rep& y : ind) CHECK(ext1_dim(x, y) == oracle::ext1(x, y));
  }
  std::mt19937_64 rng(8);
  const AlgebraPtr k = builtin("Kronecker");
  for (int t = 0; t < 20; ++t) {
    const Rep x = random_module(k, {1 + t % 3, 1 + t % 4}, rng);
    const Rep y = random_module(k, {1 + t % 2, 1 + (t + 1) % 3}, rng);
    CHECK(ext1_dim(x, y) == oracle::ext1(x, y));
  }
  // relations: modules over Ex48 built from arrow actions
  ModuleCategory c(builtin("Ex48"));
  std::vector<Rep> mods;
  for (int v = 0; v < 3; ++v) {
    mods.push_back(projective_rep(c.algebra_ptr(), v));
    mods.push_back(injective_rep(c.algebra_ptr(), v));
    mods.push_back(simple_rep(c.algebra_ptr(), v));
  }
  for (const Rep& x : mods)
    for (const Rep& y : mods) CHECK(ext1_dim(x, y) == oracle::ext1(x, y));
}

TEST_CASE("AR formula on hereditary algebras: Ext^1(X, Y) = dim Hom(Y, τX)") {
  const AlgebraPtr a = builtin("A3");
  const auto ind = oracle::intervals(a, 3);
  for (const Rep& x : ind)
    for (const Rep& y : ind) CHECK(oracle::ext1(x, y) == oracle::hom_dim(y, tau(x)));
  std::mt19937_64 rng(12);
  const AlgebraPtr k = builtin("Kronecker");
  for (int t = 0; t < 15; ++t) {
    const Rep x = random_module(k, {1 + t % 3, 1 + t % 2}, rng);
    const Rep y = random_module(k, {1 + t % 2, 1 + t % 3}, rng);
    CHECK(oracle::ext1(x, y) == oracle::hom_dim(y, tau(x)));
  }
}

TEST_CASE("τ on the Kronecker preprojective component: τ M(i+1,i+2) = M(i-1,i)") {
  // dimension vectors (d1, d2) with d2 = d1 + 1; τ lowers both by 2
  ModuleCategory c(builtin("Kronecker"));
  const Rep p1 = projective_rep(c.algebra_ptr(), 0);
  const Rep i2 = injective_rep(c.algebra_ptr(), 1);
  CHECK(tau(p1).is_zero());
  CHECK(tau(i2).dims == std::vector<int>{4, 3});
  const Rep m23 = parse_module_json(c.algebra_ptr(), R"({"dims":[2,3],"arrows":{"a":[[1,0],[0,1],[0,0]],"b":[[0,0],[1,0],[0,1]]}})");
  CHECK(tau(m23).dims == std::vector<int>{0, 1});
  CHECK(tau(simple_rep(c.algebra_ptr(), 0)).dims == std::vector<int>{3, 2});
}

TEST_CASE("minimal projective presentations") {
  const AlgebraPtr a = builtin("A3rad2");
  for (const Rep& x : oracle::intervals(a, 2)) {
    const ProjPres p = min_proj_pres(x);
    const auto tops = top_dims(x);
    CHECK(p.p0.tops.size() == static_cast<std::size_t>(std::accumulate(tops.begin(), tops.end(), 0)));
    CHECK(is_epi(p.cover));
    const RepMor d = realize(p.d, p.p1, p.p0);
    CHECK(cokernel(d, p.p1.rep, p.p0.rep).rep.dims == x.dims);
    const auto stops = top_dims(p.syzygy.rep);
    CHECK(p.p1.tops.size() == static_cast<std::size_t>(std::accumulate(stops.begin(), stops.end(), 0)));
  }
}

TEST_CASE("τ̄ and its inverse are mutually inverse on rigid pairs") {
  for (const char* name : {"A3", "A3rad2", "Lambda2"}) {
    CAPTURE(name);
    ModuleCategory c(builtin(name));
    for (const auto& u : rigid_pairs(c, 3)) {
      const ShiftedObject t = tau_bar(c, u);
      CHECK(tau_bar_inv(c, t) == u);
    }
  }
}

TEST_CASE("Auslander-Smalø criterion agrees with Ext^1 into Gen") {
  const AlgebraPtr a = builtin("A3rad2");
  const auto ind = oracle::intervals(a, 2);
  for (const Rep& m : ind)
    for (const Rep& n : ind) {
      // Hom(N, τM) = 0 iff Ext^1(M, Gen N) = 0
      bool ext_free = true;
      for (int j : oracle::gen_closure({n}, ind)) ext_free = ext_free && oracle::ext1(m, ind[j]) == 0;
      CHECK(as_criterion(n, m) == ext_free);
    }
}
