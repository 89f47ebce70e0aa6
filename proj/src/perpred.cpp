#include "tautilt/perpred.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "json.hpp"
#include "tautilt/cache.hpp"

namespace tautilt {

struct EmapInvTable {
  std::map<Shifted, Shifted> source_of;
  std::deque<std::pair<ShiftedObject, int>> frontier;
  std::set<ShiftedObject> seen;
};

namespace {

std::vector<IndecId> sorted(std::vector<IndecId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ShiftedObject as_modules(const std::vector<IndecId>& ids) {
  ShiftedObject u;
  for (auto id : ids) u.items.push_back({id, 0});
  u.normalize();
  return u;
}

IndecId single_summand(ModuleCategory& c, const Rep& x, const char* what) {
  const auto ids = c.decompose(x);
  if (ids.size() != 1) throw PerpError(std::string(what) + " is not indecomposable");
  return ids[0];
}

struct GammaData {
  AlgebraPtr gamma;
  std::vector<RepMor> maps;
};

GammaData build_gamma(ModuleCategory& c, const std::vector<IndecId>& gens) {
  const int r = static_cast<int>(gens.size());
  std::vector<const Rep*> g;
  for (auto id : gens) g.push_back(&c.rep(id));
  std::vector<BasisElement> basis;
  std::vector<RepMor> maps;
  std::vector<std::vector<std::vector<int>>> block(r, std::vector<std::vector<int>>(r));
  std::vector<int> src_of, tgt_of;  // G-level source and target of each element
  const auto add = [&](int s, int t, RepMor f, std::string label) {
    block[s][t].push_back(static_cast<int>(maps.size()));
    basis.push_back({t, s, std::move(label)});
    maps.push_back(std::move(f));
    src_of.push_back(s);
    tgt_of.push_back(t);
  };
  std::vector<EndData> ends;
  for (int s = 0; s < r; ++s) {
    ends.push_back(endomorphisms(*g[s]));
    if (ends.back().top_dim() != 1)
      throw PerpError("End of a progenerator summand is not split over the ground field");
    add(s, s, identity(*g[s]), "e" + std::to_string(s + 1));
  }
  int label = 0;
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) {
      if (s == t) {
        for (const auto& coords : ends[s].radical)
          add(s, s, combine(ends[s].basis, coords, *g[s], *g[s]), "g" + std::to_string(++label));
      } else {
        for (auto& f : hom_basis(*g[s], *g[t])) add(s, t, std::move(f), "g" + std::to_string(++label));
      }
    }
  const int d = static_cast<int>(maps.size());
  std::vector<std::vector<Mat>> cols(r, std::vector<Mat>(r));
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) {
      if (block[s][t].empty()) continue;
      std::vector<Vec> vs;
      for (int k : block[s][t]) vs.push_back(flatten(maps[k]));
      cols[s][t] = Mat::from_columns(vs, vs[0].size());
    }
  std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      if (src_of[y] != tgt_of[x]) continue;
      const int s = src_of[x], t = tgt_of[y];
      const RepMor z = compose(maps[y], maps[x]);
      if (is_zero(z)) continue;
      if (block[s][t].empty()) throw PerpError("composite outside the Hom basis");
      const auto co = solve(cols[s][t], flatten(z));
      if (!co) throw PerpError("composite outside the Hom basis");
      for (std::size_t k = 0; k < co->size(); ++k)
        if (!(*co)[k].is_zero()) mult[x][y].emplace_back(block[s][t][k], (*co)[k]);
    }
  auto gamma = std::make_shared<const BasedAlgebra>("End(G)^op", r, std::move(basis), std::move(mult));
  return {std::move(gamma), std::move(maps)};
}

}  // namespace

// ---------------------------------------------------------------- membership

bool in_jperp(ModuleCategory& c, const ShiftedObject& u, const Rep& x) {
  for (const auto& s : u.items) {
    if (hom_dim(c.rep(s.id), x) != 0) return false;
    if (s.shift == 0 && hom_dim(x, tau_rep(c, s.id)) != 0) return false;
  }
  return true;
}

bool in_jperp_inv(ModuleCategory& c, const ShiftedObject& u, const Rep& x) {
  for (const auto& s : u.items) {
    if (hom_dim(x, c.rep(s.id)) != 0) return false;
    if (s.shift == 0)
      for (auto t : tau_inv_summands(c, s.id))
        if (hom_dim(c.rep(t), x) != 0) return false;
  }
  return true;
}

Rep torsion_free_quotient(ModuleCategory& c, const std::vector<IndecId>& m, const Rep& x) {
  if (m.empty() || x.total_dim() == 0) return x;
  return quotient_by_subrep(x, trace_spaces(c.sum_of(m), x)).rep;
}

// ---------------------------------------------------------------- J(U)

PerpPtr jperp(ModuleCategory& c, const ShiftedObject& u) {
  ShiftedObject key = u;
  key.normalize();
  auto& cache = c.cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.jperp.find(key); it != cache.jperp.end()) return it->second;
  }
  if (!key.basic() || !is_rigid_pair(c, key)) throw PerpError("not a basic support tau-rigid pair: " + describe(c, key));
  const ShiftedObject b = bongartz(c, key);
  const auto m = module_part(key);
  std::vector<IndecId> gens;
  for (const auto& s : b.items) {
    if (s.shift != 0) throw PerpError("Bongartz complement has a shifted summand");
    for (auto id : c.decompose(torsion_free_quotient(c, m, c.rep(s.id))))
      if (std::find(gens.begin(), gens.end(), id) == gens.end()) gens.push_back(id);
  }
  if (static_cast<int>(gens.size()) + static_cast<int>(key.size()) != c.rank())
    throw PerpError("projectives of J(U) have the wrong count for " + describe(c, key));
  std::sort(gens.begin(), gens.end());
  auto p = std::make_shared<PerpCat>();
  p->pair = key;
  p->ambient = c.algebra_ptr();
  p->gens = gens;
  for (auto id : gens) p->gen_reps.push_back(c.rep(id));
  p->simples = simples_of(c, gens);
  p->key = {sorted(p->simples), gens};
  GammaData gd = build_gamma(c, gens);
  p->gamma = gd.gamma;
  p->gamma_maps = std::move(gd.maps);
  p->gamma_cat = std::make_shared<ModuleCategory>(p->gamma, c.seed());
  std::lock_guard lock(cache.mu);
  return cache.jperp.emplace(key, std::move(p)).first->second;
}

WideKey jperp_inv(ModuleCategory& c, const ShiftedObject& u) {
  ModuleCategory& op = c.opposite();
  ShiftedObject w;
  for (const auto& s : u.items) {
    if (s.shift == 0) {
      w.items.push_back({op.intern(dualize(c.rep(s.id), op.algebra_ptr())), 0});
    } else if (s.shift == -1) {
      const auto v = c.injective_vertex(s.id);
      if (!v) throw PerpError("negatively shifted summand is not injective");
      w.items.push_back({op.projective(*v), 1});
    } else {
      throw PerpError("jperp_inv needs shifts 0 and -1");
    }
  }
  const PerpPtr j = jperp(op, w);
  WideKey k;
  for (auto id : j->key.semibrick) k.semibrick.push_back(c.intern(dualize(op.rep(id), c.algebra_ptr())));
  std::sort(k.semibrick.begin(), k.semibrick.end());
  return k;
}

// ---------------------------------------------------------------- transport

Rep to_gamma(const PerpCat& w, const Rep& x) {
  const int r = w.rank();
  std::vector<Subspace> hom(r);
  std::vector<std::vector<RepMor>> basis(r);
  Rep y;
  y.algebra = w.gamma;
  y.dims.assign(r, 0);
  for (int i = 0; i < r; ++i) {
    const auto hb = hom_basis(w.gen_reps[i], x);
    if (hb.empty()) continue;
    std::vector<Vec> vs;
    for (const auto& f : hb) vs.push_back(flatten(f));
    hom[i] = Subspace::span(Mat::from_columns(vs, vs[0].size()));
    y.dims[i] = static_cast<int>(hom[i].dim());
    for (std::size_t k = 0; k < hom[i].dim(); ++k)
      basis[i].push_back(unflatten(hom[i].basis().column(k), w.gen_reps[i], x));
  }
  y.action.resize(w.gamma->dim());
  for (int b = 0; b < w.gamma->dim(); ++b) {
    // b is a map G_s -> G_t acting Hom(G_t, X) -> Hom(G_s, X)
    const auto& e = w.gamma->basis(b);
    const int s = e.target, t = e.source;
    Mat a(y.dims[s], y.dims[t]);
    for (int k = 0; k < y.dims[t]; ++k) {
      const Vec co = hom[s].coords(flatten(compose(basis[t][k], w.gamma_maps[b])));
      for (int i = 0; i < y.dims[s]; ++i) a(i, k) = co[i];
    }
    y.action[b] = std::move(a);
  }
  return y;
}

Rep from_gamma(const PerpCat& w, const Rep& y) {
  if (y.total_dim() == 0) return zero_rep(w.ambient);
  const ProjPres pres = min_proj_pres(y);
  const auto gsum = [&](const std::vector<int>& tops) {
    std::vector<Rep> parts;
    for (int v : tops) parts.push_back(w.gen_reps[v]);
    return direct_sum(parts);
  };
  const DirectSum g0 = gsum(pres.p0.tops);
  if (pres.p1.tops.empty()) return g0.rep;
  const DirectSum g1 = gsum(pres.p1.tops);
  RepMor phi = zero_mor(g1.rep, g0.rep);
  for (std::size_t i = 0; i < pres.d.tgt.size(); ++i)
    for (std::size_t j = 0; j < pres.d.src.size(); ++j) {
      const Vec& el = pres.d.entry[i][j];
      for (std::size_t b = 0; b < el.size(); ++b) {
        if (el[b].is_zero()) continue;
        phi = add(phi, compose(g0.inj[i], compose(scale(w.gamma_maps[b], el[b]), g1.proj[j])));
      }
    }
  return cokernel(phi, g1.rep, g0.rep).rep;
}

ShiftedObject to_gamma(ModuleCategory& c, const PerpCat& w, const ShiftedObject& v) {
  ShiftedObject out;
  for (const auto& s : v.items)
    out.items.push_back({single_summand(*w.gamma_cat, to_gamma(w, c.rep(s.id)), "transported summand"), s.shift});
  out.normalize();
  return out;
}

ShiftedObject from_gamma(ModuleCategory& c, const PerpCat& w, const ShiftedObject& v) {
  ShiftedObject out;
  for (const auto& s : v.items)
    out.items.push_back({single_summand(c, from_gamma(w, w.gamma_cat->rep(s.id)), "transported summand"), s.shift});
  out.normalize();
  return out;
}

WideKey key_from_gamma(ModuleCategory& c, const PerpCat& w, const WideKey& k) {
  WideKey out;
  for (auto id : k.semibrick) out.semibrick.push_back(c.intern(from_gamma(w, w.gamma_cat->rep(id))));
  for (auto id : k.progenerator) out.progenerator.push_back(c.intern(from_gamma(w, w.gamma_cat->rep(id))));
  std::sort(out.semibrick.begin(), out.semibrick.end());
  std::sort(out.progenerator.begin(), out.progenerator.end());
  return out;
}

// ---------------------------------------------------------------- E_U

namespace {

// E_M on one summand; the result is in 𝒞(J(M)).
Shifted emap_module_step(ModuleCategory& c, const std::vector<IndecId>& m, const Shifted& x) {
  const ShiftedObject mu = as_modules(m);
  auto& cache = c.cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.emap_step.find({mu, x}); it != cache.emap_step.end()) return it->second;
  }
  Shifted out;
  if (x.shift == 0 && !in_gen(c, m, x.id)) {
    out = {single_summand(c, torsion_free_quotient(c, m, c.rep(x.id)), "f(N)"), 0};
  } else {
    const PerpPtr jm = jperp(c, mu);
    const PerpPtr jx = jperp(c, unite(mu, ShiftedObject{{x}}));
    int found = -1;
    for (int k = 0; k < jm->rank(); ++k) {
      std::vector<IndecId> rest;
      for (int i = 0; i < jm->rank(); ++i)
        if (i != k) rest.push_back(jm->simples[i]);
      if (sorted(rest) != jx->key.semibrick) continue;
      if (found >= 0) throw PerpError("projective of J(M) matching " + describe(c, ShiftedObject{{x}}) + " is not unique");
      found = k;
    }
    if (found < 0) throw PerpError("no projective of J(M) matches " + describe(c, ShiftedObject{{x}}));
    out = {jm->gens[found], 1};
  }
  std::lock_guard lock(cache.mu);
  cache.emap_step.emplace(std::pair{mu, x}, out);
  return out;
}

ShiftedObject emap_unchecked(ModuleCategory& c, const ShiftedObject& u, const ShiftedObject& v) {
  const auto m = module_part(u);
  ShiftedObject first;
  for (const auto& x : v.items) first.items.push_back(emap_module_step(c, m, x));
  const auto p = shifted_part(u);
  if (p.empty()) {
    first.normalize();
    return first;
  }
  std::vector<IndecId> p2;
  for (auto q : p) p2.push_back(emap_module_step(c, m, {q, 1}).id);
  const Rep pr = c.sum_of(p2);
  ShiftedObject out;
  for (const auto& y : first.items) {
    if (y.shift == 0) {
      out.items.push_back(y);
    } else {
      const Rep& q = c.rep(y.id);
      out.items.push_back({single_summand(c, quotient_by_subrep(q, trace_spaces(pr, q)).rep, "f(Q)"), 1});
    }
  }
  out.normalize();
  return out;
}

void check_compatible(ModuleCategory& c, const ShiftedObject& u, const ShiftedObject& v) {
  const ShiftedObject uv = unite(u, v);
  if (!uv.basic() || !is_rigid_pair(c, uv))
    throw PerpError(describe(c, v) + " is not compatible with " + describe(c, u));
}

}  // namespace

ShiftedObject emap(ModuleCategory& c, const ShiftedObject& u, const ShiftedObject& v) {
  check_compatible(c, u, v);
  return emap_unchecked(c, u, v);
}

namespace {

bool grow_table(ModuleCategory& c, const ShiftedObject& u, EmapInvTable& t) {
  if (t.frontier.empty()) return false;
  const ShiftedObject node = t.frontier.front().first;
  t.frontier.pop_front();
  for (const auto& x : node.items) {
    if (std::binary_search(u.items.begin(), u.items.end(), x)) continue;
    const ShiftedObject one{{x}};
    const ShiftedObject img = emap_unchecked(c, u, one);
    t.source_of.emplace(img.items.at(0), x);
    const ShiftedObject next = mutate(c, node, x);
    if (t.seen.insert(next).second) t.frontier.emplace_back(next, 0);
  }
  return true;
}

}  // namespace

ShiftedObject emap_inv(ModuleCategory& c, const ShiftedObject& u0, const ShiftedObject& v, int bound) {
  ShiftedObject u = u0;
  u.normalize();
  if (v.empty()) return {};
  auto& cache = c.cache();
  std::lock_guard lock(cache.mu);
  auto& slot = cache.emap_inv[u];
  if (!slot) {
    slot = std::make_shared<EmapInvTable>();
    const ShiftedObject start = unite(u, bongartz(c, u));
    slot->seen.insert(start);
    slot->frontier.emplace_back(start, 0);
  }
  EmapInvTable& t = *slot;
  ShiftedObject pre;
  for (const auto& y : v.items) {
    auto it = t.source_of.find(y);
    while (it == t.source_of.end() && static_cast<int>(t.seen.size() - t.frontier.size()) < bound &&
           grow_table(c, u, t))
      it = t.source_of.find(y);
    if (it == t.source_of.end())
      throw PerpError("no preimage of " + describe(c, ShiftedObject{{y}}) + " under E_U within " +
                      std::to_string(bound) + " completions of " + describe(c, u));
    pre.items.push_back(it->second);
  }
  pre.normalize();
  ShiftedObject vv = v;
  vv.normalize();
  if (emap(c, u, pre) != vv) throw PerpError("preimage check failed for " + describe(c, v));
  return pre;
}

// ---------------------------------------------------------------- inside J(W)

bool is_rigid_in(ModuleCategory& c, const PerpCat& w, const ShiftedObject& u) {
  const ShiftedObject g = to_gamma(c, w, u);
  return g.basic() && is_rigid_pair(*w.gamma_cat, g);
}

WideKey jperp_in(ModuleCategory& c, const PerpCat& w, const ShiftedObject& u) {
  return key_from_gamma(c, w, jperp(*w.gamma_cat, to_gamma(c, w, u))->key);
}

ShiftedObject emap_in(ModuleCategory& c, const PerpCat& w, const ShiftedObject& u, const ShiftedObject& v) {
  return from_gamma(c, w, emap(*w.gamma_cat, to_gamma(c, w, u), to_gamma(c, w, v)));
}

ShiftedObject emap_inv_in(ModuleCategory& c, const PerpCat& w, const ShiftedObject& u, const ShiftedObject& v,
                          int bound) {
  return from_gamma(c, w, emap_inv(*w.gamma_cat, to_gamma(c, w, u), to_gamma(c, w, v), bound));
}

// ---------------------------------------------------------------- export

std::string to_json(ModuleCategory& c, const PerpCat& w) {
  using nlohmann::ordered_json;
  ordered_json j;
  auto pair = ordered_json::array();
  for (const auto& s : w.pair.items)
    pair.push_back({{"name", c.name(s.id)}, {"registry_id", s.id.value}, {"shift", s.shift}});
  j["pair"] = pair;
  j["rank"] = w.rank();
  const auto list = [&](const std::vector<IndecId>& ids) {
    auto a = ordered_json::array();
    for (auto id : ids) a.push_back({{"name", c.name(id)}, {"registry_id", id.value}, {"dims", c.dims(id)}});
    return a;
  };
  j["semibrick"] = list(w.key.semibrick);
  j["progenerator"] = list(w.gens);
  const auto& g = *w.gamma;
  ordered_json gam;
  gam["rank"] = g.rank();
  gam["dim"] = g.dim();
  auto basis = ordered_json::array();
  for (int b = 0; b < g.dim(); ++b)
    basis.push_back({{"label", g.basis(b).label}, {"source", g.basis(b).source + 1}, {"target", g.basis(b).target + 1}});
  gam["basis"] = basis;
  auto mult = ordered_json::array();
  for (int x = 0; x < g.dim(); ++x)
    for (int y = 0; y < g.dim(); ++y)
      for (const auto& [k, v] : g.product(x, y))
        mult.push_back({{"x", g.basis(x).label}, {"y", g.basis(y).label}, {"term", g.basis(k).label}, {"coeff", v.str()}});
  gam["products"] = mult;
  j["gamma"] = gam;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------- Filt(X) certificate

namespace {

// Indecomposable τ-rigid modules of total dimension at most `bound`, from
// mutation walks out of both ends that never step onto a larger summand.
std::set<IndecId> small_rigid_modules(ModuleCategory& c, int bound, int& max_seen) {
  std::set<IndecId> found;
  std::set<ShiftedObject> seen;
  std::deque<ShiftedObject> queue;
  for (const auto& s : {regular_pair(c), shifted_regular(c)})
    if (seen.insert(s).second) queue.push_back(s);
  while (!queue.empty()) {
    const ShiftedObject t = queue.front();
    queue.pop_front();
    for (const auto& x : t.items) {
      if (x.shift != 0) continue;
      found.insert(x.id);
      max_seen = std::max(max_seen, c.rep(x.id).total_dim());
    }
    for (const auto& x : t.items) {
      const ShiftedObject n = mutate(c, t, x);
      const bool small = std::all_of(n.items.begin(), n.items.end(), [&](const Shifted& y) {
        return y.shift != 0 || c.rep(y.id).total_dim() <= bound;
      });
      if (small && seen.insert(n).second) queue.push_back(n);
    }
  }
  return found;
}

}  // namespace

NotPerpReport certify_not_tau_perp(ModuleCategory& c, const std::vector<Rep>& xs, int dim_bound) {
  NotPerpReport r;
  r.hom_orthogonal = r.bricks = r.ext_vanishes = true;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const int h = hom_dim(xs[i], xs[j]);
      if (i == j && h != 1) r.bricks = false;
      if (i != j && h != 0) r.hom_orthogonal = false;
      if (ext1_dim(xs[i], xs[j]) != 0) r.ext_vanishes = false;
    }
  r.lines.push_back(std::string("Hom-orthogonal: ") + (r.hom_orthogonal ? "yes" : "no"));
  r.lines.push_back(std::string("bricks: ") + (r.bricks ? "yes" : "no"));
  r.lines.push_back(std::string("Ext1 vanishes: ") + (r.ext_vanishes ? "yes" : "no"));
  std::vector<IndecId> target;
  for (const auto& x : xs) target.push_back(c.intern(x));
  std::sort(target.begin(), target.end());
  const int want = c.rank() - static_cast<int>(xs.size());
  std::vector<ShiftedObject> pairs;
  if (want == 1) {
    for (auto id : small_rigid_modules(c, dim_bound, r.max_dim_seen)) pairs.push_back({{{id, 0}}});
    for (int v = 0; v < c.rank(); ++v) pairs.push_back({{{c.projective(v), 1}}});
  }
  for (const auto& u : pairs) {
    ++r.candidates;
    if (!std::all_of(xs.begin(), xs.end(), [&](const Rep& x) { return in_jperp(c, u, x); })) continue;
    if (jperp(c, u)->key.semibrick == target) {
      ++r.matches;
      r.lines.push_back("J(" + describe(c, u) + ") equals Filt(X)");
    }
  }
  r.lines.push_back("rank-1 pairs checked: " + std::to_string(r.candidates) + " (module summands of dimension <= " +
                    std::to_string(dim_bound) + ")");
  r.lines.push_back("matches: " + std::to_string(r.matches));
  r.lines.push_back(r.certified() ? "bounded certificate: Filt(X) is wide and not J(U) for any checked U"
                                  : "no certificate");
  return r;
}

}  // namespace tautilt
