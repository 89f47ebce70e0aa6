#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tautilt/verify.hpp"

using namespace tautilt;

namespace {

AlgebraPtr builtin(const char* name) { return compile_text(builtin_algebra(name)); }

// Random module over an algebra without relations.
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

TEST_CASE("standard modules") {
  const AlgebraPtr k = builtin("Kronecker");
  CHECK(projective_rep(k, 0).dims == std::vector<int>{1, 2});
  CHECK(projective_rep(k, 1).dims == std::vector<int>{0, 1});
  CHECK(injective_rep(k, 0).dims == std::vector<int>{1, 0});
  CHECK(injective_rep(k, 1).dims == std::vector<int>{2, 1});
  const AlgebraPtr l = builtin("Lambda2");
  CHECK(projective_rep(l, 0).dims == std::vector<int>{1, 2, 0});
  CHECK(projective_rep(l, 1).dims == std::vector<int>{0, 1, 1});
  CHECK(projective_rep(l, 2).dims == std::vector<int>{0, 0, 1});
  for (const auto& name : builtin_names()) {
    const AlgebraPtr a = builtin(name.c_str());
    int total = 0;
    for (int v = 0; v < a->rank(); ++v) {
      total += projective_rep(a, v).total_dim();
      validate(projective_rep(a, v));
      validate(injective_rep(a, v));
      CHECK(simple_rep(a, v).total_dim() == 1);
    }
    CHECK(total == a->dim());
  }
}

TEST_CASE("Hom dimensions against the linear-system oracle") {
  for (const auto& [name, len] : {std::pair{"A3", 3}, std::pair{"A3rad2", 2}}) {
    const AlgebraPtr a = builtin(name);
    const auto ind = oracle::intervals(a, len);
    for (const Rep& x : ind)
      for (const Rep& y : ind) CHECK(hom_dim(x, y) == oracle::hom_dim(x, y));
  }
  std::mt19937_64 rng(7);
  const AlgebraPtr k = builtin("Kronecker");
  for (int t = 0; t < 25; ++t) {
    const Rep x = random_module(k, {1 + t % 3, 1 + t % 2}, rng);
    const Rep y = random_module(k, {t % 2 + 1, 2 + t % 3}, rng);
    CHECK(hom_dim(x, y) == oracle::hom_dim(x, y));
    // Yoneda: Hom(P(v), X) = e_v X
    CHECK(hom_dim(projective_rep(k, 0), x) == x.dims[0]);
    CHECK(hom_dim(projective_rep(k, 1), x) == x.dims[1]);
  }
}

TEST_CASE("hom basis elements are morphisms and kernels are exact") {
  const AlgebraPtr a = builtin("A3");
  const auto ind = oracle::intervals(a, 3);
  for (const Rep& x : ind)
    for (const Rep& y : ind)
      for (const RepMor& f : hom_basis(x, y)) {
        CHECK(is_morphism(f, x, y));
        const SubRep k = kernel(f, x, y), i = image(f, x, y), c = cokernel(f, x, y);
        CHECK(k.rep.total_dim() + i.rep.total_dim() == x.total_dim());
        CHECK(c.rep.total_dim() + i.rep.total_dim() == y.total_dim());
        CHECK(is_mono(k.map));
        CHECK(is_epi(c.map));
        CHECK(is_zero(compose(f, k.map)));
      }
}

TEST_CASE("intervals are indecomposable bricks and sums decompose back") {
  Rng rng(3);
  const AlgebraPtr a = builtin("A3");
  ModuleCategory c(a);
  const auto ind = oracle::intervals(a, 3);
  std::vector<IndecId> ids;
  for (const Rep& x : ind) {
    CHECK(is_indecomposable(x, rng));
    CHECK(endomorphisms(x).dim() == 1);
    ids.push_back(c.intern(x));
  }
  // distinct isomorphism classes get distinct ids
  std::set<IndecId> distinct(ids.begin(), ids.end());
  CHECK(distinct.size() == ind.size());
  for (std::size_t i = 0; i < ind.size(); ++i)
    for (std::size_t j = i; j < ind.size(); ++j) {
      const Rep s = direct_sum({ind[i], ind[j], ind[i]}).rep;
      std::vector<IndecId> want{ids[i], ids[j], ids[i]};
      std::sort(want.begin(), want.end());
      CHECK(c.decompose(s) == want);
      const auto cert = c.decompose_certified(s);
      CHECK(cert.size() == 3);
    }
}

TEST_CASE("Kronecker preprojectives are bricks; a regular module with eigenvalue is not split") {
  Rng rng(1);
  const AlgebraPtr k = builtin("Kronecker");
  // M(2,3): a = [I; 0], b = [0; I]
  Mat a = Mat::from_rows({{1, 0}, {0, 1}, {0, 0}}), b = Mat::from_rows({{0, 0}, {1, 0}, {0, 1}});
  const Rep m23 = from_generators(k, {2, 3}, {a, b});
  CHECK(is_indecomposable(m23, rng));
  CHECK(endomorphisms(m23).dim() == 1);
  // a 2x2 Jordan block is indecomposable but not a brick
  const Rep j = from_generators(k, {2, 2}, {Mat::identity(2), Mat::from_rows({{1, 1}, {0, 1}})});
  CHECK(is_indecomposable(j, rng));
  CHECK(endomorphisms(j).dim() == 2);
  CHECK(endomorphisms(j).top_dim() == 1);
  // two distinct eigenvalues split
  const Rep d = from_generators(k, {2, 2}, {Mat::identity(2), Mat::from_rows({{1, 0}, {0, 2}})});
  CHECK(split_indecomposables(d, rng).size() == 2);
}

TEST_CASE("iso and duality") {
  Rng rng(9);
  std::mt19937_64 gen(4);
  const AlgebraPtr k = builtin("Kronecker");
  const AlgebraPtr op = opposite(*k);
  for (int t = 0; t < 10; ++t) {
    const Rep x = random_module(k, {2, 2}, gen);
    CHECK(iso(dualize(dualize(x, op), k), x, rng));
    CHECK(iso(x, x, rng));
  }
  const AlgebraPtr a = builtin("A3");
  const auto ind = oracle::intervals(a, 3);
  for (std::size_t i = 0; i < ind.size(); ++i)
    for (std::size_t j = 0; j < ind.size(); ++j) CHECK(iso(ind[i], ind[j], rng) == (i == j));
}

TEST_CASE("trace and radical") {
  const AlgebraPtr a = builtin("A3");
  const Rep p1 = projective_rep(a, 0);
  CHECK(top_dims(p1) == std::vector<int>{1, 0, 0});
  // the trace of P(2) in P(1) is rad P(1)
  const SubRep t = trace_in(projective_rep(a, 1), p1);
  CHECK(t.rep.dims == std::vector<int>{0, 1, 1});
  const SubRep r = reject_in(simple_rep(a, 0), p1);
  CHECK(r.rep.dims == std::vector<int>{1, 0, 0});
}
