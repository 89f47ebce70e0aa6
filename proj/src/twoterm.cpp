#include "tautilt/twoterm.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "tautilt/cache.hpp"

namespace tautilt {

namespace {

std::vector<int> all_vertices(const BasedAlgebra& a) {
  std::vector<int> v(a.rank());
  for (int i = 0; i < a.rank(); ++i) v[i] = i;
  return v;
}

// Flattened coordinates of a PMap restricted to positions that can be nonzero.
std::vector<std::size_t> valid_positions(const BasedAlgebra& a, const std::vector<int>& src,
                                         const std::vector<int>& tgt) {
  std::vector<std::size_t> pos;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < tgt.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      for (int b : a.block(tgt[i], src[j])) pos.push_back((i * src.size() + j) * d + b);
  return pos;
}

Vec restrict(const Vec& v, const std::vector<std::size_t>& pos) {
  Vec r;
  r.reserve(pos.size());
  for (auto p : pos) r.push_back(v[p]);
  return r;
}

// Representatives of a basis of span(unit vectors) / span(vs) in K^dim.
std::vector<std::size_t> complement_units(const std::vector<Vec>& vs, std::size_t dim) {
  if (vs.empty()) {
    std::vector<std::size_t> all(dim);
    for (std::size_t i = 0; i < dim; ++i) all[i] = i;
    return all;
  }
  return Subspace::span(Mat::from_columns(vs, dim)).free_rows();
}

std::vector<int> repeat(const std::vector<int>& v, int m) {
  std::vector<int> out;
  for (int k = 0; k < m; ++k) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- complexes

TwoTerm two_term(ModuleCategory& c, const Shifted& x) {
  const auto& a = c.algebra();
  if (x.shift == 1) {
    const auto v = c.projective_vertex(x.id);
    if (!v) throw TwoTermError("shifted summand is not projective");
    return {{*v}, {}, zero_pmap(a, {*v}, {})};
  }
  if (x.shift != 0) throw TwoTermError("two-term complexes need shifts 0 or 1");
  const ProjPres& p = presentation(c, x.id);
  return {p.p1.tops, p.p0.tops, p.d};
}

TwoTerm direct_sum(const BasedAlgebra& a, const std::vector<TwoTerm>& parts) {
  TwoTerm t;
  std::vector<PMap> ds;
  for (const auto& p : parts) {
    t.q1.insert(t.q1.end(), p.q1.begin(), p.q1.end());
    t.q0.insert(t.q0.end(), p.q0.begin(), p.q0.end());
    ds.push_back(p.d);
  }
  t.d = ds.empty() ? zero_pmap(a, {}, {}) : block_diag(a, ds);
  return t;
}

TwoTerm two_term(ModuleCategory& c, const ShiftedObject& u) {
  std::vector<TwoTerm> parts;
  for (const auto& s : u.items) parts.push_back(two_term(c, s));
  return direct_sum(c.algebra(), parts);
}

ShiftedObject decompose_two_term(ModuleCategory& c, const TwoTerm& x) {
  const auto& alg = c.algebra_ptr();
  const ProjSum r1 = proj_sum(alg, x.q1), r0 = proj_sum(alg, x.q0);
  const RepMor d = realize(x.d, r1, r0);
  ShiftedObject out;
  for (auto id : c.decompose(cokernel(d, r1.rep, r0.rep).rep)) out.items.push_back({id, 0});
  const auto topim = top_dims(image(d, r1.rep, r0.rep).rep);
  std::vector<int> q(alg->rank(), 0);
  for (int v : x.q1) ++q[v];
  for (int v = 0; v < alg->rank(); ++v) {
    const int extra = q[v] - topim[v];
    if (extra < 0) throw TwoTermError("negative shifted multiplicity");
    for (int k = 0; k < extra; ++k) out.items.push_back({c.projective(v), 1});
  }
  out.normalize();
  return out;
}

int hom_upto_homotopy(const BasedAlgebra& a, const TwoTerm& x, const TwoTerm& y, int shift) {
  if (shift == 1) {
    // Hom(x1, y0) / (Hom(x0, y0) d_x + d_y Hom(x1, y1))
    const auto pos = valid_positions(a, x.q1, y.q0);
    if (pos.empty()) return 0;
    std::vector<Vec> sub;
    for (const auto& g : pmap_basis(a, x.q0, y.q0)) sub.push_back(restrict(flatten(compose(a, g, x.d)), pos));
    for (const auto& h : pmap_basis(a, x.q1, y.q1)) sub.push_back(restrict(flatten(compose(a, y.d, h)), pos));
    const std::size_t r = sub.empty() ? 0 : rank(Mat::from_columns(sub, pos.size()));
    return static_cast<int>(pos.size() - r);
  }
  if (shift != 0) throw TwoTermError("hom_upto_homotopy supports shifts 0 and 1");
  // Chain maps (f1, f0) with f0 d_x = d_y f1, modulo (h d_x, d_y h).
  const auto b1 = pmap_basis(a, x.q1, y.q1);
  const auto b0 = pmap_basis(a, x.q0, y.q0);
  const auto pos1 = valid_positions(a, x.q1, y.q1);
  const auto pos0 = valid_positions(a, x.q0, y.q0);
  const auto posc = valid_positions(a, x.q1, y.q0);
  const std::size_t n1 = b1.size(), n0 = b0.size();
  if (n1 + n0 == 0) return 0;
  Mat eq(posc.size(), n1 + n0);
  for (std::size_t k = 0; k < n1; ++k) {
    const Vec v = restrict(flatten(compose(a, y.d, b1[k])), posc);
    for (std::size_t r = 0; r < posc.size(); ++r) eq(r, k) = -v[r];
  }
  for (std::size_t k = 0; k < n0; ++k) {
    const Vec v = restrict(flatten(compose(a, b0[k], x.d)), posc);
    for (std::size_t r = 0; r < posc.size(); ++r) eq(r, n1 + k) = v[r];
  }
  const std::size_t chain_dim = n1 + n0 - (posc.empty() ? 0 : rank(eq));
  std::vector<Vec> htpy;
  for (const auto& h : pmap_basis(a, x.q0, y.q1)) {
    Vec v = restrict(flatten(compose(a, h, x.d)), pos1);
    const Vec w = restrict(flatten(compose(a, y.d, h)), pos0);
    v.insert(v.end(), w.begin(), w.end());
    htpy.push_back(std::move(v));
  }
  const std::size_t null_dim = htpy.empty() ? 0 : rank(Mat::from_columns(htpy, n1 + n0));
  return static_cast<int>(chain_dim - null_dim);
}

// ---------------------------------------------------------------- pairs

ShiftedObject remove_one(const ShiftedObject& u, const Shifted& x) {
  ShiftedObject r = u;
  const auto it = std::find(r.items.begin(), r.items.end(), x);
  if (it == r.items.end()) throw TwoTermError("summand not present");
  r.items.erase(it);
  return r;
}

ShiftedObject unite(const ShiftedObject& a, const ShiftedObject& b) {
  ShiftedObject r = a;
  r.items.insert(r.items.end(), b.items.begin(), b.items.end());
  r.normalize();
  return r;
}

std::vector<IndecId> module_part(const ShiftedObject& u) {
  std::vector<IndecId> m;
  for (const auto& s : u.items)
    if (s.shift == 0) m.push_back(s.id);
  return m;
}

std::vector<IndecId> shifted_part(const ShiftedObject& u) {
  std::vector<IndecId> p;
  for (const auto& s : u.items)
    if (s.shift != 0) p.push_back(s.id);
  return p;
}

namespace {
int hom_to_tau(ModuleCategory& c, IndecId x, IndecId y) {
  auto& cache = c.cache();
  const auto key = std::make_pair(x.value, y.value);
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.hom_tau.find(key); it != cache.hom_tau.end()) return it->second;
  }
  const int h = hom_dim(c.rep(x), tau_rep(c, y));
  std::lock_guard lock(cache.mu);
  cache.hom_tau[key] = h;
  return h;
}
}  // namespace

bool is_rigid_pair(ModuleCategory& c, const ShiftedObject& u) {
  const auto m = module_part(u);
  for (const auto& s : u.items) {
    if (s.shift != 0 && s.shift != 1) return false;
    if (s.shift == 1 && !c.is_projective(s.id)) return false;
  }
  for (const auto& s : u.items) {
    if (s.shift != 1) continue;
    const int v = *c.projective_vertex(s.id);
    for (auto x : m)
      if (c.rep(x).dims[v] != 0) return false;
  }
  for (auto x : m)
    for (auto y : m)
      if (hom_to_tau(c, x, y) != 0) return false;
  return true;
}

bool is_tau_tilting(ModuleCategory& c, const ShiftedObject& u) {
  ShiftedObject b = u;
  b.normalize();
  b.items.erase(std::unique(b.items.begin(), b.items.end()), b.items.end());
  return static_cast<int>(b.size()) == c.rank() && is_rigid_pair(c, b);
}

RigidPair RigidPair::make(ModuleCategory& c, ShiftedObject u) {
  u.normalize();
  if (!u.basic()) throw TwoTermError("pair is not basic");
  if (!is_rigid_pair(c, u)) throw TwoTermError("not a support tau-rigid pair: " + describe(c, u));
  return RigidPair(std::move(u));
}

std::vector<IndecId> RigidPair::modules() const { return module_part(u_); }
std::vector<IndecId> RigidPair::shifted() const { return shifted_part(u_); }

ShiftedObject regular_pair(ModuleCategory& c) {
  ShiftedObject u;
  for (int v = 0; v < c.rank(); ++v) u.items.push_back({c.projective(v), 0});
  u.normalize();
  return u;
}

ShiftedObject shifted_regular(ModuleCategory& c) {
  ShiftedObject u;
  for (int v = 0; v < c.rank(); ++v) u.items.push_back({c.projective(v), 1});
  u.normalize();
  return u;
}

// ---------------------------------------------------------------- completions

namespace {

ShiftedObject new_summands(const ShiftedObject& x, const ShiftedObject& u) {
  ShiftedObject out;
  for (const auto& s : x.items) {
    if (std::find(u.items.begin(), u.items.end(), s) != u.items.end()) continue;
    if (std::find(out.items.begin(), out.items.end(), s) != out.items.end()) continue;
    out.items.push_back(s);
  }
  out.normalize();
  return out;
}

ShiftedObject compute_bongartz(ModuleCategory& c, const ShiftedObject& u) {
  const auto& a = c.algebra();
  const auto lam = all_vertices(a);
  const TwoTerm t = two_term(c, u);
  // Hom_K(T, Λ[1]) = Hom(T1, Λ) / Hom(T0, Λ) d_T
  const auto pos = valid_positions(a, t.q1, lam);
  std::vector<Vec> sub;
  for (const auto& g : pmap_basis(a, t.q0, lam)) sub.push_back(restrict(flatten(compose(a, g, t.d)), pos));
  const auto reps = complement_units(sub, pos.size());
  const int m = static_cast<int>(reps.size());
  const auto basis = pmap_basis(a, t.q1, lam);  // flattened order matches pos
  TwoTerm x;
  x.q1 = repeat(t.q1, m);
  x.q0 = repeat(t.q0, m);
  x.q0.insert(x.q0.end(), lam.begin(), lam.end());
  if (m == 0) {
    x.d = zero_pmap(a, {}, x.q0);
  } else {
    PMap approx = basis[reps[0]];
    for (int k = 1; k < m; ++k) approx = hstack(a, approx, basis[reps[k]]);
    x.d = vstack(a, block_diag(a, std::vector<PMap>(m, t.d)), approx);
  }
  return new_summands(decompose_two_term(c, x), u);
}

ShiftedObject compute_co_bongartz(ModuleCategory& c, const ShiftedObject& u) {
  const auto& a = c.algebra();
  const auto lam = all_vertices(a);
  const TwoTerm t = two_term(c, u);
  // Hom_K(Λ, T) = Hom(Λ, T0) / d_T Hom(Λ, T1)
  const auto pos = valid_positions(a, lam, t.q0);
  std::vector<Vec> sub;
  for (const auto& h : pmap_basis(a, lam, t.q1)) sub.push_back(restrict(flatten(compose(a, t.d, h)), pos));
  const auto reps = complement_units(sub, pos.size());
  const int m = static_cast<int>(reps.size());
  const auto basis = pmap_basis(a, lam, t.q0);
  TwoTerm y;
  y.q1 = lam;
  const auto t1m = repeat(t.q1, m);
  y.q1.insert(y.q1.end(), t1m.begin(), t1m.end());
  y.q0 = repeat(t.q0, m);
  if (m == 0) {
    y.d = zero_pmap(a, lam, {});
  } else {
    PMap psi = basis[reps[0]];
    for (int k = 1; k < m; ++k) psi = vstack(a, psi, basis[reps[k]]);
    y.d = hstack(a, psi, block_diag(a, std::vector<PMap>(m, t.d)));
  }
  return new_summands(decompose_two_term(c, y), u);
}

bool contains_all(const ShiftedObject& t, const ShiftedObject& u) {
  return std::all_of(u.items.begin(), u.items.end(), [&](const Shifted& s) {
    return std::find(t.items.begin(), t.items.end(), s) != t.items.end();
  });
}

bool gen_contains(ModuleCategory& c, const std::vector<IndecId>& gens, const std::vector<IndecId>& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](IndecId x) { return in_gen(c, gens, x); });
}

// Gen(t) ⊆ ⊥τM ∩ P^⊥ for u = M ⊔ P[1].
bool below_bongartz(ModuleCategory& c, const ShiftedObject& t, const ShiftedObject& u) {
  const auto tm = module_part(t);
  for (auto y : tm) {
    for (auto p : shifted_part(u))
      if (c.hom_dim(p, y) != 0) return false;
    for (auto m : module_part(u))
      if (hom_to_tau(c, y, m) != 0) return false;
  }
  return true;
}

template <typename Walk>
ShiftedObject race(Walk& down, Walk& up, const char* what) {
  constexpr int kMaxSteps = 4000;
  for (int step = 0; step < kMaxSteps; ++step) {
    if (auto r = down.step()) return *r;
    if (auto r = up.step()) return *r;
  }
  throw TwoTermError(std::string("no ") + what + " completion found within the step limit");
}

// One walk through the exchange graph. `accept` filters neighbours,
// `done` reports the result at the current node; with stop_when_stuck the
// current node is final once no neighbour is accepted.
struct Walk {
  ModuleCategory& c;
  ShiftedObject t;
  bool downward;
  std::function<bool(const ShiftedObject&)> accept;
  std::function<bool(const ShiftedObject&)> done;
  bool stop_when_stuck;
  ShiftedObject u;
  bool finished = false;

  std::optional<ShiftedObject> step() {
    if (finished) return std::nullopt;
    if (done && done(t)) return new_summands(t, u);
    for (const auto& x : t.items) {
      if (left_mutable(c, t, x) != downward) continue;
      ShiftedObject n = mutate(c, t, x);
      if (accept(n)) {
        t = std::move(n);
        return std::nullopt;
      }
    }
    if (stop_when_stuck) return new_summands(t, u);
    finished = true;
    return std::nullopt;
  }
};

ShiftedObject walk_bongartz(ModuleCategory& c, const ShiftedObject& u) {
  ModuleCategory& op = c.opposite();
  const ShiftedObject ud = dagger(c, op, u);
  const auto udm = module_part(ud);
  Walk down{c, regular_pair(c), true,
            [&](const ShiftedObject& n) { return gen_contains(op, udm, module_part(dagger(c, op, n))); },
            [&](const ShiftedObject& t) { return contains_all(t, u); }, false, u};
  Walk up{c, shifted_regular(c), false, [&](const ShiftedObject& n) { return below_bongartz(c, n, u); }, nullptr,
          true, u};
  return race(down, up, "Bongartz");
}

ShiftedObject walk_co_bongartz(ModuleCategory& c, const ShiftedObject& u) {
  const auto um = module_part(u);
  Walk down{c, regular_pair(c), true, [&](const ShiftedObject& n) { return gen_contains(c, module_part(n), um); },
            nullptr, true, u};
  Walk up{c, shifted_regular(c), false, [&](const ShiftedObject& n) { return gen_contains(c, um, module_part(n)); },
          [&](const ShiftedObject& t) { return contains_all(t, u); }, false, u};
  return race(up, down, "co-Bongartz");
}

template <typename F>
ShiftedObject cached(ModuleCategory& c, std::map<ShiftedObject, ShiftedObject> ModuleCategory::Cache::*table,
                     const ShiftedObject& u, F compute) {
  auto& cache = c.cache();
  {
    std::lock_guard lock(cache.mu);
    auto& m = cache.*table;
    if (auto it = m.find(u); it != m.end()) return it->second;
  }
  ShiftedObject r = compute(c, u);
  std::lock_guard lock(cache.mu);
  (cache.*table)[u] = r;
  return r;
}

ShiftedObject checked_key(ModuleCategory& c, const ShiftedObject& u) {
  ShiftedObject key = u;
  key.normalize();
  if (!key.basic() || !is_rigid_pair(c, key)) throw TwoTermError("not a basic support tau-rigid pair: " + describe(c, key));
  return key;
}

// B ⊔ U support τ-tilting, and for the Bongartz side no summand of B in Gen M.
ShiftedObject validated(ModuleCategory& c, const ShiftedObject& u, const ShiftedObject& b, bool bongartz_side) {
  if (!is_tau_tilting(c, unite(u, b)))
    throw TwoTermError("completion of " + describe(c, u) + " is not support tau-tilting: " + describe(c, b));
  if (bongartz_side) {
    const auto m = module_part(u);
    for (const auto& x : b.items)
      if (x.shift == 0 && !m.empty() && in_gen(c, m, x.id))
        throw TwoTermError("Bongartz summand " + c.name(x.id) + " lies in Gen M for " + describe(c, u));
  }
  return b;
}

}  // namespace

ShiftedObject bongartz(ModuleCategory& c, const ShiftedObject& u) {
  const ShiftedObject key = checked_key(c, u);
  return validated(c, key, cached(c, &ModuleCategory::Cache::bongartz, key, walk_bongartz), true);
}

ShiftedObject co_bongartz(ModuleCategory& c, const ShiftedObject& u) {
  const ShiftedObject key = checked_key(c, u);
  return validated(c, key, cached(c, &ModuleCategory::Cache::co_bongartz, key, walk_co_bongartz), false);
}

ShiftedObject bongartz_by_extension(ModuleCategory& c, const ShiftedObject& u) {
  return compute_bongartz(c, checked_key(c, u));
}

ShiftedObject co_bongartz_by_extension(ModuleCategory& c, const ShiftedObject& u) {
  return compute_co_bongartz(c, checked_key(c, u));
}

ShiftedObject dagger(ModuleCategory& from, ModuleCategory& to, const ShiftedObject& u) {
  ShiftedObject out;
  for (const auto& s : u.items) {
    const auto v = from.projective_vertex(s.id);
    if (s.shift == 1) {
      out.items.push_back({to.projective(*v), 0});
    } else if (v) {
      out.items.push_back({to.projective(*v), 1});
    } else {
      out.items.push_back({to.intern(dualize(tau_rep(from, s.id), to.algebra_ptr())), 0});
    }
  }
  out.normalize();
  return out;
}

bool left_mutable(ModuleCategory& c, const ShiftedObject& t, const Shifted& x) {
  if (x.shift != 0) return false;
  return !in_gen(c, module_part(remove_one(t, x)), x.id);
}

namespace {

ShiftedObject left_mutate(ModuleCategory& c, const ShiftedObject& t, const Shifted& x) {
  const ShiftedObject u = remove_one(t, x);
  auto um = module_part(u);
  const LeftApprox ap = min_left_approx(c, um, c.rep(x.id));
  const Rep y = cokernel(ap.map, c.rep(x.id), ap.sum).rep;
  ShiftedObject out = u;
  if (y.total_dim() != 0) {
    const auto ids = c.decompose(y);
    if (ids.size() != 1) throw TwoTermError("mutation cokernel is decomposable");
    out.items.push_back({ids[0], 0});
  } else {
    const Rep sum = c.sum_of(um);
    std::optional<int> fresh;
    for (int v = 0; v < c.rank(); ++v) {
      if (!um.empty() && sum.dims[v] != 0) continue;
      const Shifted p{c.projective(v), 1};
      if (std::find(u.items.begin(), u.items.end(), p) != u.items.end()) continue;
      if (fresh) throw TwoTermError("ambiguous shifted projective in mutation");
      fresh = v;
    }
    if (!fresh) throw TwoTermError("no shifted projective available for mutation");
    out.items.push_back({c.projective(*fresh), 1});
  }
  out.normalize();
  return out;
}

}  // namespace

bool is_bongartz_side(ModuleCategory& c, const ShiftedObject& t, const Shifted& x) { return left_mutable(c, t, x); }

ShiftedObject mutate(ModuleCategory& c, const ShiftedObject& t, const Shifted& x) {
  if (static_cast<int>(t.size()) != c.rank()) throw TwoTermError("mutation needs a support tau-tilting pair");
  if (std::find(t.items.begin(), t.items.end(), x) == t.items.end()) throw TwoTermError("summand not present");
  auto& cache = c.cache();
  const auto key = std::make_pair(t, x);
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.mutations.find(key); it != cache.mutations.end()) return it->second;
  }
  ShiftedObject r;
  if (left_mutable(c, t, x)) {
    r = left_mutate(c, t, x);
  } else {
    ModuleCategory& op = c.opposite();
    const ShiftedObject td = dagger(c, op, t);
    const ShiftedObject xd = dagger(c, op, ShiftedObject{{x}});
    if (!left_mutable(op, td, xd.items[0])) throw TwoTermError("summand is mutable in neither direction");
    r = dagger(op, c, left_mutate(op, td, xd.items[0]));
  }
  std::lock_guard lock(cache.mu);
  cache.mutations[key] = r;
  return r;
}

// ---------------------------------------------------------------- Gen and approximations

bool in_gen(const Rep& m, const Rep& x) {
  if (x.total_dim() == 0) return true;
  const auto s = trace_spaces(m, x);
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    if (static_cast<int>(s[v].dim()) != x.dims[v]) return false;
  return true;
}

bool in_gen(ModuleCategory& c, const std::vector<IndecId>& m, IndecId x) {
  if (m.empty()) return false;
  auto& cache = c.cache();
  std::vector<int> key;
  for (auto i : m) key.push_back(i.value);
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  key.push_back(-1 - x.value);
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.in_gen.find(key); it != cache.in_gen.end()) return it->second;
  }
  std::vector<IndecId> distinct;
  for (std::size_t k = 0; k + 1 < key.size(); ++k) distinct.push_back(IndecId{key[k]});
  const bool r = in_gen(c.sum_of(distinct), c.rep(x));
  std::lock_guard lock(cache.mu);
  cache.in_gen[key] = r;
  return r;
}

namespace {

// Radical morphisms N_k -> N_j between members of a list of pairwise
// non-isomorphic indecomposables.
std::vector<RepMor> radical_maps(ModuleCategory& c, IndecId k, IndecId j) {
  const Rep& nk = c.rep(k);
  const Rep& nj = c.rep(j);
  if (k != j) return hom_basis(nk, nj);
  const EndData e = endomorphisms(nj);
  std::vector<RepMor> out;
  for (const auto& coords : e.radical) {
    std::vector<Scalar> cs(coords.begin(), coords.end());
    out.push_back(combine(e.basis, cs, nj, nj));
  }
  return out;
}

}  // namespace

LeftApprox min_left_approx(ModuleCategory& c, const std::vector<IndecId>& n, const Rep& x) {
  std::vector<IndecId> targets;
  std::vector<RepMor> maps;
  std::vector<std::vector<RepMor>> hom(n.size());
  for (std::size_t j = 0; j < n.size(); ++j) hom[j] = hom_basis(x, c.rep(n[j]));
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (hom[j].empty()) continue;
    const Rep& nj = c.rep(n[j]);
    std::vector<Vec> sub;
    for (std::size_t k = 0; k < n.size(); ++k) {
      if (hom[k].empty()) continue;
      for (const auto& g : radical_maps(c, n[k], n[j]))
        for (const auto& h : hom[k]) sub.push_back(flatten(compose(g, h)));
    }
    const std::size_t len = flatten(hom[j][0]).size();
    std::size_t r = sub.empty() ? 0 : rank(Mat::from_columns(sub, len));
    for (const auto& h : hom[j]) {
      sub.push_back(flatten(h));
      const std::size_t r2 = rank(Mat::from_columns(sub, len));
      if (r2 > r) {
        r = r2;
        targets.push_back(n[j]);
        maps.push_back(h);
      } else {
        sub.pop_back();
      }
    }
    (void)nj;
  }
  LeftApprox out;
  out.targets = targets;
  if (targets.empty()) {
    out.sum = zero_rep(x.algebra);
    out.map = zero_mor(x, out.sum);
    return out;
  }
  std::vector<Rep> parts;
  for (auto t : targets) parts.push_back(c.rep(t));
  const DirectSum ds = direct_sum(parts);
  out.sum = ds.rep;
  out.map = zero_mor(x, out.sum);
  for (std::size_t k = 0; k < maps.size(); ++k) out.map = add(out.map, compose(ds.inj[k], maps[k]));
  return out;
}

SplitNonsplit split_nonsplit(ModuleCategory& c, const ShiftedObject& t) {
  if (!is_tau_tilting(c, t)) throw TwoTermError("split_nonsplit needs a support tau-tilting pair");
  auto m = module_part(t);
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  SplitNonsplit out;
  if (m.empty()) return out;
  const ProjSum lam = proj_sum(c.algebra_ptr(), all_vertices(c.algebra()));
  const LeftApprox ap = min_left_approx(c, m, lam.rep);
  for (auto id : ap.targets)
    if (out.split.empty() || out.split.back() != id) out.split.push_back(id);
  for (auto id : c.decompose(cokernel(ap.map, lam.rep, ap.sum).rep))
    if (out.nonsplit.empty() || out.nonsplit.back() != id) out.nonsplit.push_back(id);
  return out;
}

// ---------------------------------------------------------------- exploration

MutationGraph explore(ModuleCategory& c, int depth, bool from_both_ends) {
  MutationGraph g;
  std::deque<int> queue;
  const auto add_node = [&](const ShiftedObject& u, int d) {
    auto [it, fresh] = g.index.emplace(u, static_cast<int>(g.nodes.size()));
    if (fresh) {
      g.nodes.push_back(u);
      g.depth.push_back(d);
      queue.push_back(it->second);
    }
    return it->second;
  };
  add_node(regular_pair(c), 0);
  if (from_both_ends) add_node(shifted_regular(c), 0);
  bool truncated = false;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    if (g.depth[i] >= depth) {
      truncated = true;
      continue;
    }
    const ShiftedObject t = g.nodes[i];
    for (const auto& x : t.items) {
      const ShiftedObject nb = mutate(c, t, x);
      const int j = add_node(nb, g.depth[i] + 1);
      if (j == i) throw TwoTermError("mutation returned the same pair");
      if (i < j || g.depth[j] >= depth) {
        // Record each undirected edge once; edges into unexpanded nodes are
        // recorded from the expanded side only.
        const bool seen = std::any_of(g.edges.begin(), g.edges.end(), [&](const MutationEdge& e) {
          return (e.from == i && e.to == j) || (e.from == j && e.to == i);
        });
        if (!seen) {
          Shifted added{};
          for (const auto& s : nb.items)
            if (std::find(t.items.begin(), t.items.end(), s) == t.items.end()) added = s;
          g.edges.push_back({i, j, x, added, is_bongartz_side(c, t, x)});
        }
      }
    }
  }
  g.complete = !truncated;
  return g;
}

std::string to_dot(ModuleCategory& c, const MutationGraph& g) {
  std::ostringstream os;
  os << "graph mutation {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << describe(c, g.nodes[i]) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -- n" << e.to << " [label=\"" << describe(c, ShiftedObject{{e.removed}}) << " / "
       << describe(c, ShiftedObject{{e.added}}) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(ModuleCategory& c, const MutationGraph& g) {
  nlohmann::ordered_json j;
  j["complete"] = g.complete;
  j["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    nlohmann::ordered_json n;
    n["id"] = i;
    n["depth"] = g.depth[i];
    n["label"] = describe(c, g.nodes[i]);
    auto& summands = n["summands"] = nlohmann::ordered_json::array();
    for (const auto& s : g.nodes[i].items)
      summands.push_back({{"registry_id", s.id.value}, {"shift", s.shift}, {"dims", c.rep(s.id).dims}});
    j["nodes"].push_back(n);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"from", e.from},
                          {"to", e.to},
                          {"removed", describe(c, ShiftedObject{{e.removed}})},
                          {"added", describe(c, ShiftedObject{{e.added}})},
                          {"from_larger", e.from_larger}});
  return j.dump(2) + "\n";
}

}  // namespace tautilt
