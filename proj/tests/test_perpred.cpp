#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "tautilt/perpred.hpp"
#include "tautilt/verify.hpp"

using namespace tautilt;

namespace {

constexpr std::pair<const char*, int> kFinite[] = {{"A2", 2}, {"A3", 3}, {"A3rad2", 2}};

// X ∈ M^⊥ ∩ ⊥(τM) ∩ P^⊥, with Hom(X, τM) = 0 read as Ext^1(M, Gen X) = 0.
bool oracle_in_perp(ModuleCategory& c, const ShiftedObject& u, const Rep& x, const std::vector<Rep>& indec) {
  for (auto id : shifted_part(u))
    if (x.dims[*c.projective_vertex(id)] != 0) return false;
  for (auto id : module_part(u)) {
    const Rep& m = c.rep(id);
    if (oracle::hom_dim(m, x) != 0) return false;
    for (int j : oracle::gen_closure({x}, indec))
      if (oracle::ext1(m, indec[j]) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("J(U) membership against the definition") {
  for (const auto& [name, len] : kFinite) {
    CAPTURE(name);
    ModuleCategory c(compile_text(builtin_algebra(name)));
    const auto indec = oracle::intervals(c.algebra_ptr(), len);
    for (const auto& u : rigid_pairs(c, 20)) {
      CAPTURE(describe(c, u));
      const PerpPtr w = jperp(c, u);
      for (const Rep& x : indec) {
        const bool want = oracle_in_perp(c, u, x, indec);
        CHECK(in_jperp(c, u, x) == want);
        CHECK(in_wide(c, w->key, x) == want);
      }
    }
  }
}

TEST_CASE("the reduced algebra Γ") {
  for (const auto& [name, len] : kFinite) {
    CAPTURE(name);
    ModuleCategory c(compile_text(builtin_algebra(name)));
    for (const auto& u : rigid_pairs(c, 20)) {
      const PerpPtr w = jperp(c, u);
      CHECK(w->rank() + static_cast<int>(u.size()) == c.rank());
      int dim = 0;
      for (const Rep& gi : w->gen_reps)
        for (const Rep& gj : w->gen_reps) dim += oracle::hom_dim(gi, gj);
      CHECK(w->gamma->dim() == dim);
      CHECK(w->gamma->rank() == w->rank());
      // simples of J(U) are the simple Γ-modules
      for (int i = 0; i < w->rank(); ++i) {
        const Rep s = to_gamma(*w, c.rep(w->simples[i]));
        CHECK(s.total_dim() == 1);
        CHECK(s.dims[i] == 1);
      }
    }
  }
}

TEST_CASE("Hom(G, -) and its quasi-inverse") {
  Rng rng(2);
  ModuleCategory c(compile_text(builtin_algebra("A3")));
  const auto indec = oracle::intervals(c.algebra_ptr(), 3);
  for (const auto& u : rigid_pairs(c, 20)) {
    const PerpPtr w = jperp(c, u);
    for (const Rep& x : indec) {
      if (!in_wide(c, w->key, x)) continue;
      const Rep y = to_gamma(*w, x);
      CHECK(iso(from_gamma(*w, y), x, rng));
    }
    for (int i = 0; i < w->rank(); ++i) {
      ShiftedObject p{{{w->gens[i], 0}}};
      ShiftedObject pg = to_gamma(c, *w, p);
      CHECK(from_gamma(c, *w, pg) == p);
    }
  }
}

TEST_CASE("E_U is a bijection onto the support τ-rigid objects of J(U)") {
  for (const auto& [name, len] : kFinite) {
    CAPTURE(name);
    ModuleCategory c(compile_text(builtin_algebra(name)));
    const auto pairs = rigid_pairs(c, 20);
    for (const auto& u : pairs) {
      CAPTURE(describe(c, u));
      const PerpPtr w = jperp(c, u);
      std::set<ShiftedObject> image;
      int domain = 0;
      for (const auto& v : pairs) {
        ShiftedObject both = unite(u, v);
        bool disjoint = true;
        for (const auto& x : v.items) disjoint = disjoint && !std::binary_search(u.items.begin(), u.items.end(), x);
        if (!disjoint || std::find(pairs.begin(), pairs.end(), both) == pairs.end()) continue;
        ++domain;
        const ShiftedObject e = emap(c, u, v);
        CHECK(e.size() == v.size());
        CHECK(is_rigid_in(c, *w, e));
        image.insert(e);
        CHECK(emap_inv(c, u, e) == v);
      }
      CHECK(static_cast<int>(image.size()) == domain);
      // the codomain, counted inside mod Γ
      CHECK(static_cast<int>(rigid_pairs(*w->gamma_cat, 20).size()) == domain);
    }
  }
}

TEST_CASE("Serre subcategories: J(P[1]) = P^⊥") {
  ModuleCategory c(compile_text(builtin_algebra("Lambda2")));
  for (int v = 0; v < 3; ++v) {
    const IndecId p = c.projective(v);
    CHECK(jperp(c, ShiftedObject{{{p, 1}}})->key == serre(c, {p}));
  }
}

TEST_CASE("J and J^{-1} through τ̄") {
  for (const char* name : {"A3", "A3rad2", "Kronecker", "Lambda2"}) {
    CAPTURE(name);
    ModuleCategory c(compile_text(builtin_algebra(name)));
    for (const auto& u : rigid_pairs(c, 3)) CHECK(jperp(c, u)->key == jperp_inv(c, tau_bar(c, u)));
  }
}

TEST_CASE("non-rigid input is rejected") {
  ModuleCategory c(compile_text(builtin_algebra("A3")));
  // P(1) and P(1)[1] together are not rigid
  const ShiftedObject bad{{{c.projective(0), 0}, {c.projective(0), 1}}};
  CHECK_THROWS(jperp(c, bad));
}

TEST_CASE("bounded certificate fails for a genuine τ-perpendicular category") {
  ModuleCategory c(compile_text(builtin_algebra("A3")));
  const PerpPtr w = jperp(c, ShiftedObject{{{c.simple(1), 0}}});
  std::vector<Rep> xs;
  for (auto id : w->simples) xs.push_back(c.rep(id));
  const NotPerpReport r = certify_not_tau_perp(c, xs, 6);
  CHECK(r.hom_orthogonal);
  CHECK(r.matches > 0);
  CHECK_FALSE(r.certified());
}
