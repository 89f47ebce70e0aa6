#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <iterator>
#include <set>

#include "oracles.hpp"
#include "tautilt/twoterm.hpp"
#include "tautilt/verify.hpp"

using namespace tautilt;

namespace {

struct Case {
  const char* name;
  int max_len;
};
constexpr Case kFinite[] = {{"A2", 2}, {"A3", 3}, {"A3rad2", 2}};

ShiftedObject to_object(ModuleCategory& c, const oracle::Pair& p, const std::vector<Rep>& indec) {
  ShiftedObject u;
  for (int i : p.modules) u.items.push_back({c.intern(indec[i]), 0});
  for (int v : p.shifted) u.items.push_back({c.projective(v), 1});
  u.normalize();
  return u;
}

// Indices into indec of the module summands, and the vertices of P[1].
std::pair<std::vector<int>, std::vector<int>> to_oracle(ModuleCategory& c, const ShiftedObject& u,
                                                        const std::vector<Rep>& indec) {
  std::vector<int> m, p;
  for (const auto& x : u.items) {
    if (x.shift == 1) {
      p.push_back(*c.projective_vertex(x.id));
      continue;
    }
    for (int i = 0; i < static_cast<int>(indec.size()); ++i)
      if (c.intern(indec[i]) == x.id) m.push_back(i);
  }
  return {m, p};
}

}  // namespace

TEST_CASE("mutation graph node sets equal brute-force support τ-tilting enumeration") {
  for (const auto& k : kFinite) {
    CAPTURE(k.name);
    ModuleCategory c(compile_text(builtin_algebra(k.name)));
    const auto indec = oracle::intervals(c.algebra_ptr(), k.max_len);
    std::set<ShiftedObject> brute;
    for (const auto& p : oracle::support_tau_tilting(indec, c.rank())) brute.insert(to_object(c, p, indec));
    const MutationGraph g = explore(c, 20);
    CHECK(g.complete);
    const std::set<ShiftedObject> nodes(g.nodes.begin(), g.nodes.end());
    CHECK(nodes == brute);
    // every node has one neighbour per summand
    std::vector<int> degree(g.nodes.size(), 0);
    for (const auto& e : g.edges) {
      ++degree[e.from];
      ++degree[e.to];
    }
    for (int d : degree) CHECK(d == c.rank());
  }
}

TEST_CASE("support τ-tilting counts") {
  // A2: 5, A3: 14 (Catalan numbers)
  ModuleCategory a2(compile_text(builtin_algebra("A2")));
  ModuleCategory a3(compile_text(builtin_algebra("A3")));
  CHECK(explore(a2, 10).nodes.size() == 5);
  CHECK(explore(a3, 10).nodes.size() == 14);
}

TEST_CASE("Bongartz and co-Bongartz completions against the Ext-projective oracle") {
  for (const auto& k : kFinite) {
    CAPTURE(k.name);
    ModuleCategory c(compile_text(builtin_algebra(k.name)));
    const auto indec = oracle::intervals(c.algebra_ptr(), k.max_len);
    for (const auto& u : rigid_pairs(c, 20)) {
      CAPTURE(describe(c, u));
      const auto [m, p] = to_oracle(c, u, indec);
      const ShiftedObject want_b = to_object(c, oracle::bongartz(m, p, indec, c.rank()), indec);
      const ShiftedObject want_c = to_object(c, oracle::co_bongartz(m, indec, c.rank()), indec);
      CHECK(unite(u, bongartz(c, u)) == want_b);
      CHECK(unite(u, co_bongartz(c, u)) == want_c);
      CHECK(unite(u, bongartz_by_extension(c, u)) == want_b);
      CHECK(unite(u, co_bongartz_by_extension(c, u)) == want_c);
    }
  }
}

TEST_CASE("split projectives generate and are the Bongartz complement of the rest") {
  for (const auto& k : kFinite) {
    CAPTURE(k.name);
    ModuleCategory c(compile_text(builtin_algebra(k.name)));
    const auto indec = oracle::intervals(c.algebra_ptr(), k.max_len);
    for (const auto& t : explore(c, 20).nodes) {
      CAPTURE(describe(c, t));
      const SplitNonsplit sn = split_nonsplit(c, t);
      ShiftedObject ms, rest;
      for (auto id : sn.split) ms.items.push_back({id, 0});
      for (auto id : sn.nonsplit) rest.items.push_back({id, 0});
      for (auto id : shifted_part(t)) rest.items.push_back({id, 1});
      ms.normalize();
      rest.normalize();
      CHECK(unite(ms, rest) == t);
      CHECK(bongartz(c, rest) == ms);
      CHECK(co_bongartz(c, ms) == rest);
      // Gen M_s = Gen M
      std::vector<Rep> all, split;
      for (auto id : module_part(t)) all.push_back(c.rep(id));
      for (auto id : sn.split) split.push_back(c.rep(id));
      CHECK(oracle::gen_closure(all, indec) == oracle::gen_closure(split, indec));
    }
  }
}

TEST_CASE("mutation is an involution and exchanges one summand") {
  for (const auto& k : kFinite) {
    ModuleCategory c(compile_text(builtin_algebra(k.name)));
    for (const auto& t : explore(c, 20).nodes)
      for (const auto& x : t.items) {
        const ShiftedObject s = mutate(c, t, x);
        CHECK(is_tau_tilting(c, s));
        std::vector<Shifted> added;
        std::set_difference(s.items.begin(), s.items.end(), t.items.begin(), t.items.end(), std::back_inserter(added));
        REQUIRE(added.size() == 1);
        CHECK(remove_one(s, added[0]) == remove_one(t, x));
        CHECK(mutate(c, s, added[0]) == t);
        CHECK(is_bongartz_side(c, t, x) != is_bongartz_side(c, s, added[0]));
      }
  }
}

TEST_CASE("rigidity is vanishing of Hom(U, U[1]) in the homotopy category") {
  ModuleCategory c(compile_text(builtin_algebra("A3rad2")));
  const auto indec = oracle::intervals(c.algebra_ptr(), 2);
  std::vector<Shifted> xs;
  for (const Rep& r : indec) xs.push_back({c.intern(r), 0});
  for (int v = 0; v < c.rank(); ++v) xs.push_back({c.projective(v), 1});
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      ShiftedObject u{{xs[i], xs[j]}};
      u.normalize();
      if (xs[i].id == xs[j].id) continue;
      const TwoTerm t = two_term(c, u);
      CHECK(is_rigid_pair(c, u) == (hom_upto_homotopy(c.algebra(), t, t, 1) == 0));
    }
}

TEST_CASE("two-term complexes decompose back to their summands") {
  ModuleCategory c(compile_text(builtin_algebra("Lambda2")));
  for (const auto& t : explore(c, 3, true).nodes) CHECK(decompose_two_term(c, two_term(c, t)) == t);
}

TEST_CASE("dagger is an involution onto support τ-tilting pairs of the opposite algebra") {
  for (const char* name : {"A3", "A3rad2", "Kronecker"}) {
    CAPTURE(name);
    ModuleCategory c(compile_text(builtin_algebra(name)));
    ModuleCategory& op = c.opposite();
    for (const auto& t : explore(c, 4, true).nodes) {
      const ShiftedObject d = dagger(c, op, t);
      CHECK(is_tau_tilting(op, d));
      CHECK(dagger(op, c, d) == t);
    }
  }
}

TEST_CASE("Gen membership against the oracle") {
  ModuleCategory c(compile_text(builtin_algebra("A3")));
  const auto indec = oracle::intervals(c.algebra_ptr(), 3);
  for (const Rep& m : indec)
    for (const Rep& x : indec) CHECK(in_gen(m, x) == oracle::in_gen({m}, x));
}
