#include "tautilt/taucmc.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "json.hpp"

namespace tautilt {

std::optional<int> CmcGraph::find_object(const WideKey& k) const {
  auto it = object_index.find(k);
  if (it == object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<int> CmcGraph::find_morphism(int source, const ShiftedObject& label) const {
  auto it = morphism_index.find({source, label});
  if (it == morphism_index.end()) return std::nullopt;
  return it->second;
}

std::vector<int> CmcGraph::out_of(int object) const {
  std::vector<int> out;
  for (auto it = morphism_index.lower_bound({object, ShiftedObject{}});
       it != morphism_index.end() && it->first.first == object; ++it)
    out.push_back(it->second);
  return out;
}

namespace {

std::set<ShiftedObject> subsets_of_nodes(const MutationGraph& mg) {
  std::set<ShiftedObject> out;
  for (const auto& n : mg.nodes) {
    const int k = static_cast<int>(n.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      ShiftedObject u;
      for (int j = 0; j < k; ++j)
        if (mask >> j & 1) u.items.push_back(n.items[j]);
      out.insert(u);
    }
  }
  return out;
}

int add_object(CmcGraph& g, WideKey key, ShiftedObject pair, PerpPtr perp) {
  const int id = static_cast<int>(g.objects.size());
  g.object_index.emplace(key, id);
  g.objects.push_back({std::move(key), std::move(pair), std::move(perp), false});
  return id;
}

void add_morphism(CmcGraph& g, int s, int t, ShiftedObject label) {
  g.morphism_index.emplace(std::pair{s, label}, static_cast<int>(g.morphisms.size()));
  g.morphisms.push_back({s, t, std::move(label)});
}

void build_fan(ModuleCategory& c, CmcGraph& g, int i, int max_objects) {
  const PerpPtr w = g.objects[i].perp;
  const ShiftedObject base = g.objects[i].pair;
  add_morphism(g, i, i, {});
  if (w->rank() == 0) {
    g.objects[i].complete = true;
    return;
  }
  ModuleCategory& gc = *w->gamma_cat;
  const MutationGraph mg = explore(gc, g.depth, true);
  bool complete = mg.complete;
  for (const auto& lg : subsets_of_nodes(mg)) {
    if (lg.empty()) continue;
    const ShiftedObject label = from_gamma(c, *w, lg);
    const WideKey tk = key_from_gamma(c, *w, jperp(gc, lg)->key);
    auto t = g.find_object(tk);
    if (!t) {
      if (static_cast<int>(g.objects.size()) >= max_objects) {
        complete = false;
        continue;
      }
      const ShiftedObject pair = unite(base, emap_inv(c, base, label));
      PerpPtr p = jperp(c, pair);
      if (!(p->key == tk))
        throw PerpError("J(" + describe(c, pair) + ") differs from the reduction of " + describe(c, label));
      t = add_object(g, tk, pair, std::move(p));
    }
    add_morphism(g, i, *t, label);
  }
  g.objects[i].complete = complete;
}

}  // namespace

CmcGraph build(ModuleCategory& c, int depth, int max_objects) {
  CmcGraph g;
  g.depth = depth;
  PerpPtr whole = jperp(c, {});
  add_object(g, whole->key, {}, whole);
  for (std::size_t i = 0; i < g.objects.size(); ++i) build_fan(c, g, static_cast<int>(i), max_objects);
  return g;
}

CmcMorphism compose(ModuleCategory& c, const CmcGraph& g, const CmcMorphism& second, const CmcMorphism& first) {
  if (first.target != second.source) throw PerpError("morphisms are not composable");
  if (first.is_identity()) return second;
  if (second.is_identity()) return first;
  const PerpCat& w1 = *g.objects[first.source].perp;
  const ShiftedObject pre = emap_inv_in(c, w1, first.label, second.label);
  return {first.source, second.target, unite(first.label, pre)};
}

void compose_all(ModuleCategory& c, CmcGraph& g) {
  g.compositions.clear();
  for (int f = 0; f < static_cast<int>(g.morphisms.size()); ++f) {
    const CmcMorphism& first = g.morphisms[f];
    if (first.is_identity()) continue;
    for (int s : g.out_of(first.target)) {
      const CmcMorphism& second = g.morphisms[s];
      if (second.is_identity()) continue;
      Composite k{s, f, -1, {}};
      const CmcMorphism m = compose(c, g, second, first);
      k.label = m.label;
      if (auto r = g.find_morphism(m.source, m.label)) k.result = *r;
      g.compositions.push_back(std::move(k));
    }
  }
}

int morphism_count(const CmcGraph& g, int w, int v) {
  const auto& a = g.objects[w];
  const auto& b = g.objects[v];
  if (!a.complete || !b.complete) throw PerpError("morphism_count needs complete objects");
  if (b.rank() + 1 != a.rank()) throw PerpError("morphism_count needs corank one");
  int n = 0;
  for (int m : g.out_of(w))
    if (g.morphisms[m].target == v && g.morphisms[m].label.size() == 1) ++n;
  return n;
}

// ---------------------------------------------------------------- checks

namespace {

std::string arrow(ModuleCategory& c, const CmcGraph& g, const CmcMorphism& m) {
  return describe(c, g.objects[m.source].key) + " --" + describe(c, m.label) + "--> " +
         describe(c, g.objects[m.target].key);
}

bool same(const CmcMorphism& a, const CmcMorphism& b) {
  return a.source == b.source && a.target == b.target && a.label == b.label;
}

}  // namespace

CheckResult check_identities(ModuleCategory& c, const CmcGraph& g) {
  CheckResult r;
  for (const auto& m : g.morphisms) {
    const auto is = g.find_morphism(m.source, {});
    const auto it = g.find_morphism(m.target, {});
    ++r.checked;
    if (!is || !it) {
      r.fail("missing identity at " + arrow(c, g, m));
      continue;
    }
    if (!same(compose(c, g, m, g.morphisms[*is]), m) || !same(compose(c, g, g.morphisms[*it], m), m))
      r.fail("identity law fails for " + arrow(c, g, m));
  }
  return r;
}

CheckResult check_associativity(ModuleCategory& c, const CmcGraph& g) {
  CheckResult r;
  for (const auto& e : g.morphisms) {
    if (e.is_identity()) continue;
    for (int fi : g.out_of(e.target)) {
      const auto& f = g.morphisms[fi];
      if (f.is_identity()) continue;
      for (int hi : g.out_of(f.target)) {
        const auto& h = g.morphisms[hi];
        if (h.is_identity()) continue;
        ++r.checked;
        try {
          const CmcMorphism lhs = compose(c, g, compose(c, g, h, f), e);
          const CmcMorphism rhs = compose(c, g, h, compose(c, g, f, e));
          if (!same(lhs, rhs))
            r.fail("(" + describe(c, h.label) + " . " + describe(c, f.label) + ") . " + describe(c, e.label) + " gives " +
                   describe(c, lhs.label) + " but the other bracketing gives " + describe(c, rhs.label));
        } catch (const std::exception& ex) {
          r.fail(std::string("composition failed: ") + ex.what());
        }
      }
    }
  }
  return r;
}

CheckResult check_hom_emptiness(ModuleCategory& c, const CmcGraph& g) {
  CheckResult r;
  for (const auto& m : g.morphisms) {
    ++r.checked;
    const auto& s = g.objects[m.source];
    const auto& t = g.objects[m.target];
    if (!wide_contains(c, s.key, t.key)) r.fail("target not contained in source: " + arrow(c, g, m));
    else if (!(jperp_in(c, *s.perp, m.label) == t.key)) r.fail("target differs from J_W(U): " + arrow(c, g, m));
  }
  return r;
}

CheckResult check_corank_one(ModuleCategory& c, const CmcGraph& g) {
  CheckResult r;
  for (const auto& m : g.morphisms) {
    const auto& s = g.objects[m.source];
    const auto& t = g.objects[m.target];
    if (m.label.size() != 1 || !s.complete || !t.complete) continue;
    ++r.checked;
    const Shifted x = m.label.items[0];
    const auto& gens = s.perp->gens;
    const bool projective = x.shift == 1 || std::binary_search(gens.begin(), gens.end(), x.id);
    const int n = morphism_count(g, m.source, m.target);
    if (n != (projective ? 2 : 1))
      r.fail(arrow(c, g, m) + ": " + std::to_string(n) + " rank-one morphisms, label " +
             (projective ? "projective" : "not projective") + " in the source");
  }
  return r;
}

CheckResult conjecture_search(ModuleCategory& c, const CmcGraph& g) {
  CheckResult r;
  for (int w = 0; w < static_cast<int>(g.objects.size()); ++w) {
    if (!g.objects[w].complete) continue;
    std::set<int> targets;
    for (int m : g.out_of(w)) targets.insert(g.morphisms[m].target);
    for (int v = 0; v < static_cast<int>(g.objects.size()); ++v) {
      if (!wide_contains(c, g.objects[w].key, g.objects[v].key)) continue;
      ++r.checked;
      if (!targets.count(v))
        r.fail(describe(c, g.objects[v].key) + " is τ-perpendicular in mod Λ but not in " + describe(c, g.objects[w].key));
    }
  }
  return r;
}

CheckResult check_reduction(ModuleCategory& c, const CmcGraph& g, int w, int depth) {
  CheckResult r;
  std::set<int> sub{w};
  std::deque<int> queue{w};
  while (!queue.empty()) {
    const int o = queue.front();
    queue.pop_front();
    for (int m : g.out_of(o))
      if (sub.insert(g.morphisms[m].target).second) queue.push_back(g.morphisms[m].target);
  }
  using Edge = std::tuple<WideKey, ShiftedObject, WideKey>;
  std::set<Edge> mine, theirs;
  std::set<WideKey> mine_obj, theirs_obj;
  for (int o : sub) mine_obj.insert(g.objects[o].key);
  for (const auto& m : g.morphisms)
    if (sub.count(m.source)) mine.insert({g.objects[m.source].key, m.label, g.objects[m.target].key});

  const PerpCat& pw = *g.objects[w].perp;
  ModuleCategory& gc = *pw.gamma_cat;
  const CmcGraph h = build(gc, depth);
  std::vector<WideKey> keys;
  for (const auto& o : h.objects) {
    keys.push_back(key_from_gamma(c, pw, o.key));
    theirs_obj.insert(keys.back());
  }
  for (const auto& m : h.morphisms) theirs.insert({keys[m.source], from_gamma(c, pw, m.label), keys[m.target]});
  r.checked = static_cast<int>(mine.size() + mine_obj.size());
  if (mine_obj != theirs_obj)
    r.fail("object sets differ: " + std::to_string(mine_obj.size()) + " vs " + std::to_string(theirs_obj.size()));
  for (const auto& e : mine)
    if (!theirs.count(e)) r.fail("only in mod Λ: " + describe(c, std::get<1>(e)) + " out of " + describe(c, std::get<0>(e)));
  for (const auto& e : theirs)
    if (!mine.count(e)) r.fail("only in mod Γ: " + describe(c, std::get<1>(e)) + " out of " + describe(c, std::get<0>(e)));
  return r;
}

// ---------------------------------------------------------------- export

namespace {

std::vector<int> object_order(const CmcGraph& g) {
  std::vector<int> ord(g.objects.size());
  for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
  std::sort(ord.begin(), ord.end(), [&](int a, int b) {
    const auto& x = g.objects[a];
    const auto& y = g.objects[b];
    if (x.rank() != y.rank()) return x.rank() > y.rank();
    return x.key.semibrick < y.key.semibrick;
  });
  return ord;
}

std::vector<int> morphism_order(const CmcGraph& g, const std::vector<int>& pos) {
  std::vector<int> ord(g.morphisms.size());
  for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
  std::sort(ord.begin(), ord.end(), [&](int a, int b) {
    const auto& x = g.morphisms[a];
    const auto& y = g.morphisms[b];
    return std::tie(pos[x.source], x.label, pos[x.target]) < std::tie(pos[y.source], y.label, pos[y.target]);
  });
  return ord;
}

std::vector<int> positions(const std::vector<int>& ord) {
  std::vector<int> pos(ord.size());
  for (std::size_t i = 0; i < ord.size(); ++i) pos[ord[i]] = static_cast<int>(i);
  return pos;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string to_dot(ModuleCategory& c, const CmcGraph& g) {
  const auto ord = object_order(g);
  const auto pos = positions(ord);
  std::string s = "digraph W {\n";
  for (std::size_t i = 0; i < ord.size(); ++i) {
    const auto& o = g.objects[ord[i]];
    s += "  w" + std::to_string(i) + " [label=\"" + escape(describe(c, o.key)) + "\"";
    if (!o.complete) s += ", style=dashed";
    s += "];\n";
  }
  for (int m : morphism_order(g, pos)) {
    const auto& x = g.morphisms[m];
    if (x.is_identity()) continue;
    s += "  w" + std::to_string(pos[x.source]) + " -> w" + std::to_string(pos[x.target]) + " [label=\"" +
         escape(describe(c, x.label)) + "\"];\n";
  }
  return s + "}\n";
}

std::string to_json(ModuleCategory& c, const CmcGraph& g) {
  using nlohmann::ordered_json;
  const auto ord = object_order(g);
  const auto pos = positions(ord);
  const auto mord = morphism_order(g, pos);
  const auto mpos = positions(mord);
  ordered_json j;
  j["depth"] = g.depth;
  auto objs = ordered_json::array();
  for (std::size_t i = 0; i < ord.size(); ++i) {
    const auto& o = g.objects[ord[i]];
    auto names = [&](const std::vector<IndecId>& ids) {
      auto a = ordered_json::array();
      for (auto id : ids) a.push_back({{"name", c.name(id)}, {"registry_id", id.value}, {"dims", c.dims(id)}});
      return a;
    };
    objs.push_back({{"id", i},
                    {"rank", o.rank()},
                    {"label", describe(c, o.key)},
                    {"complete", o.complete},
                    {"semibrick", names(o.key.semibrick)},
                    {"progenerator", names(o.perp->gens)}});
  }
  j["objects"] = objs;
  auto mors = ordered_json::array();
  for (std::size_t i = 0; i < mord.size(); ++i) {
    const auto& m = g.morphisms[mord[i]];
    auto items = ordered_json::array();
    for (const auto& s : m.label.items)
      items.push_back({{"name", c.name(s.id)}, {"registry_id", s.id.value}, {"shift", s.shift}});
    mors.push_back({{"id", i},
                    {"source", pos[m.source]},
                    {"target", pos[m.target]},
                    {"label", describe(c, m.label)},
                    {"identity", m.is_identity()},
                    {"summands", items}});
  }
  j["morphisms"] = mors;
  std::vector<std::tuple<int, int, int>> comp;
  for (const auto& k : g.compositions)
    comp.emplace_back(mpos[k.second], mpos[k.first], k.result < 0 ? -1 : mpos[k.result]);
  std::sort(comp.begin(), comp.end());
  auto cs = ordered_json::array();
  for (const auto& [a, b, r] : comp) {
    ordered_json e = {{"second", a}, {"first", b}};
    e["result"] = r < 0 ? ordered_json(nullptr) : ordered_json(r);
    cs.push_back(e);
  }
  j["compositions"] = cs;
  return j.dump(2) + "\n";
}

}  // namespace tautilt
