#include "tautilt/widetors.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "tautilt/perpred.hpp"

namespace tautilt {

namespace {

Rep sum_or_zero(ModuleCategory& c, const std::vector<IndecId>& ids) {
  return ids.empty() ? zero_rep(c.algebra_ptr()) : c.sum_of(ids);
}

bool full_trace(const Rep& m, const Rep& x) {
  const auto s = trace_spaces(m, x);
  for (std::size_t v = 0; v < s.size(); ++v)
    if (static_cast<int>(s[v].dim()) != x.dims[v]) return false;
  return true;
}

}  // namespace

TorsionHandle TorsionHandle::torsion_class(ModuleCategory& c, ShiftedObject pair) {
  pair.normalize();
  if (!is_tau_tilting(c, pair)) throw TwoTermError("torsion handle needs a support tau-tilting pair");
  return {std::move(pair), Role::torsion};
}

TorsionHandle TorsionHandle::torsion_free_class(ModuleCategory& c, ShiftedObject pair) {
  TorsionHandle h = torsion_class(c, std::move(pair));
  h.role = Role::torsion_free;
  return h;
}

bool member(ModuleCategory& c, const TorsionHandle& h, const Rep& x) {
  const auto m = h.generators();
  if (h.role == TorsionHandle::Role::torsion) return x.total_dim() == 0 || (!m.empty() && full_trace(c.sum_of(m), x));
  for (auto id : m)
    if (hom_dim(c.rep(id), x) != 0) return false;
  return true;
}

CanonicalSeq canonical_seq(ModuleCategory& c, const TorsionHandle& h, const Rep& x) {
  const Rep m = sum_or_zero(c, h.generators());
  SubRep t = trace_in(m, x);
  const auto spaces = trace_spaces(m, x);
  SubRep f = quotient_by_subrep(x, spaces);
  return {std::move(t), std::move(f)};
}

Approx left_torsion_approx(ModuleCategory& c, const TorsionHandle& tc, const Rep& x) {
  if (x.total_dim() == 0) return {x, identity(x)};
  const auto [cover, pi] = projective_cover(x);
  const LeftApprox ap = min_left_approx(c, tc.generators(), cover.rep);
  const SubRep omega = kernel(pi, cover.rep, x);
  // X -> M_P / im(Ω): the approximation P -> M_P kills Ω after the quotient.
  const RepMor into = compose(ap.map, omega.map);
  const SubRep q = cokernel(into, omega.rep, ap.sum);
  // Induced map X -> coker: choose preimages along the cover, vertex by vertex.
  const RepMor through = compose(q.map, ap.map);  // P -> coker, vanishes on Ω
  RepMor out;
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    const Mat& p = pi.blocks[v];  // x_v x P_v, surjective
    const Mat& t = through.blocks[v];
    Mat o(t.rows(), p.rows());
    // Solve o * p = t column block by rows: p^T o^T = t^T.
    const Mat pt = p.transpose();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      Vec rhs(t.cols());
      for (std::size_t j = 0; j < t.cols(); ++j) rhs[j] = t(r, j);
      const auto sol = solve(pt, rhs);
      if (!sol) throw TwoTermError("left approximation does not factor through the cover");
      for (std::size_t j = 0; j < p.rows(); ++j) o(r, j) = (*sol)[j];
    }
    out.blocks.push_back(std::move(o));
  }
  return {q.rep, std::move(out)};
}

Approx left_intersection_approx(ModuleCategory& c, const TorsionHandle& tc, const TorsionHandle& fc,
                                const Rep& x) {
  const Approx t = left_torsion_approx(c, tc, x);
  const CanonicalSeq s = canonical_seq(c, fc, t.target);
  return {s.free_part.rep, compose(s.free_part.map, t.map)};
}

WideKey whole_category(ModuleCategory& c) {
  WideKey k;
  for (int v = 0; v < c.rank(); ++v) {
    k.semibrick.push_back(c.simple(v));
    k.progenerator.push_back(c.projective(v));
  }
  std::sort(k.semibrick.begin(), k.semibrick.end());
  std::sort(k.progenerator.begin(), k.progenerator.end());
  return k;
}

WideKey zero_category() { return {}; }

std::vector<IndecId> simples_of(ModuleCategory& c, const std::vector<IndecId>& progenerator) {
  std::vector<IndecId> out;
  for (std::size_t i = 0; i < progenerator.size(); ++i) {
    const Rep& gi = c.rep(progenerator[i]);
    VertexSpaces sub(gi.dims.size());
    for (std::size_t v = 0; v < sub.size(); ++v) sub[v] = Subspace(static_cast<std::size_t>(gi.dims[v]));
    for (std::size_t j = 0; j < progenerator.size(); ++j) {
      if (j == i) continue;
      const auto t = trace_spaces(c.rep(progenerator[j]), gi);
      for (std::size_t v = 0; v < sub.size(); ++v) sub[v] = sub[v] + t[v];
    }
    const EndData e = endomorphisms(gi);
    for (const auto& coords : e.radical) {
      const RepMor r = combine(e.basis, std::vector<Scalar>(coords.begin(), coords.end()), gi, gi);
      for (std::size_t v = 0; v < sub.size(); ++v)
        if (gi.dims[v] != 0) sub[v] = sub[v] + Subspace::span(r.blocks[v]);
    }
    const Rep s = quotient_by_subrep(gi, closure(gi, sub)).rep;
    if (s.total_dim() == 0) throw TwoTermError("progenerator summand has no simple top");
    out.push_back(c.intern(s));
  }
  return out;
}

WideKey serre(ModuleCategory& c, const std::vector<IndecId>& projectives) {
  std::vector<char> killed(c.rank(), 0);
  for (auto p : projectives) {
    const auto v = c.projective_vertex(p);
    if (!v) throw TwoTermError("serre: not a projective module: " + c.name(p));
    killed[*v] = 1;
  }
  WideKey k;
  const Rep p = sum_or_zero(c, projectives);
  for (int v = 0; v < c.rank(); ++v) {
    if (killed[v]) continue;
    k.semibrick.push_back(c.simple(v));
    const Rep q = quotient_by_subrep(c.rep(c.projective(v)), trace_spaces(p, c.rep(c.projective(v)))).rep;
    k.progenerator.push_back(c.intern(q));
  }
  std::sort(k.semibrick.begin(), k.semibrick.end());
  std::sort(k.progenerator.begin(), k.progenerator.end());
  return k;
}

WideKey wl(ModuleCategory& c, const TorsionHandle& tc) {
  const SplitNonsplit sn = split_nonsplit(c, tc.pair);
  ShiftedObject u;
  for (auto id : sn.nonsplit) u.items.push_back({id, 0});
  for (auto id : shifted_part(tc.pair)) u.items.push_back({id, 1});
  u.normalize();
  return jperp(c, u)->key;
}

WideKey wr(ModuleCategory& c, const TorsionHandle& fc) {
  const SplitNonsplit sn = split_nonsplit(c, fc.pair);
  ShiftedObject u;
  for (auto id : sn.split) u.items.push_back({id, 0});
  u.normalize();
  return jperp(c, u)->key;
}

bool in_wide(ModuleCategory& c, const WideKey& w, const Rep& x) {
  if (x.total_dim() == 0) return true;
  std::vector<Rep> s;
  for (auto id : w.semibrick) s.push_back(c.rep(id));
  return filt_member(x, s, c.rng());
}

bool wide_contains(ModuleCategory& c, const WideKey& w, const WideKey& v) {
  return std::all_of(v.semibrick.begin(), v.semibrick.end(), [&](IndecId s) { return in_wide(c, w, c.rep(s)); });
}

namespace {

// t1 ≤ t2 in the torsion order.
bool below(ModuleCategory& c, const ShiftedObject& t1, const ShiftedObject& t2) {
  const auto m2 = module_part(t2);
  for (auto x : module_part(t1))
    if (!in_gen(c, m2, x)) return false;
  return true;
}

}  // namespace

std::optional<TorsionHandle> filt_gen(ModuleCategory& c, const MutationGraph& g, const WideKey& w) {
  if (!g.complete) return std::nullopt;
  std::optional<ShiftedObject> best;
  for (const auto& t : g.nodes) {
    const auto m = module_part(t);
    const bool ok = std::all_of(w.semibrick.begin(), w.semibrick.end(), [&](IndecId s) { return in_gen(c, m, s); });
    if (ok && (!best || below(c, t, *best))) best = t;
  }
  if (!best) return std::nullopt;
  return TorsionHandle::torsion_class(c, *best);
}

std::optional<TorsionHandle> filt_cogen(ModuleCategory& c, const MutationGraph& g, const WideKey& w) {
  if (!g.complete) return std::nullopt;
  std::optional<ShiftedObject> best;
  for (const auto& t : g.nodes) {
    bool ok = true;
    for (auto m : module_part(t))
      for (auto s : w.semibrick)
        if (ok && c.hom_dim(m, s) != 0) ok = false;
    if (ok && (!best || below(c, *best, t))) best = t;
  }
  if (!best) return std::nullopt;
  return TorsionHandle::torsion_free_class(c, *best);
}

std::string to_string(Finiteness f) {
  switch (f) {
    case Finiteness::yes: return "yes";
    case Finiteness::no: return "no";
    default: return "unknown";
  }
}

Finiteness left_finite(ModuleCategory& c, const MutationGraph& g, const WideKey& w) {
  const auto t = filt_gen(c, g, w);
  if (!t) return Finiteness::unknown;
  return wl(c, *t) == w ? Finiteness::yes : Finiteness::no;
}

Finiteness right_finite(ModuleCategory& c, const MutationGraph& g, const WideKey& w) {
  const auto f = filt_cogen(c, g, w);
  if (!f) return Finiteness::unknown;
  return wr(c, *f) == w ? Finiteness::yes : Finiteness::no;
}

std::string describe(ModuleCategory& c, const WideKey& w) {
  if (w.semibrick.empty()) return "0";
  if (w == whole_category(c)) return "mod";
  std::string s = "Filt(";
  for (std::size_t i = 0; i < w.semibrick.size(); ++i) s += (i ? ", " : "") + c.name(w.semibrick[i]);
  return s + ")";
}

std::string to_json(ModuleCategory& c, const WideKey& w) {
  nlohmann::ordered_json j;
  j["rank"] = w.rank();
  j["label"] = describe(c, w);
  auto list = [&](const std::vector<IndecId>& ids) {
    auto a = nlohmann::ordered_json::array();
    for (auto id : ids) a.push_back({{"registry_id", id.value}, {"name", c.name(id)}, {"dims", c.dims(id)}});
    return a;
  };
  j["semibrick"] = list(w.semibrick);
  j["progenerator"] = list(w.progenerator);
  return j.dump(2) + "\n";
}

}  // namespace tautilt
