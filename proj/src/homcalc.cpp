#include "tautilt/homcalc.hpp"

#include <algorithm>

#include "tautilt/cache.hpp"

namespace tautilt {

namespace {

// Basis elements of e_t A e_s, i.e. with source s and target t.
std::vector<int> elems(const BasedAlgebra& a, int s, int t) { return a.block(s, t); }

Scalar coeff(const Vec& v, int k) { return v[k]; }

Vec unit(const BasedAlgebra& a, int b) {
  Vec v(a.dim());
  v[b] = 1;
  return v;
}

}  // namespace

ProjSum proj_sum(const AlgebraPtr& a, const std::vector<int>& tops) {
  ProjSum p;
  p.tops = tops;
  const int n = a->rank();
  std::vector<int> run(n, 0);
  std::vector<Rep> parts;
  for (int t : tops) {
    std::vector<int> off(n);
    for (int u = 0; u < n; ++u) {
      off[u] = run[u];
      run[u] += static_cast<int>(elems(*a, t, u).size());
    }
    p.offsets.push_back(std::move(off));
    parts.push_back(projective_rep(a, t));
  }
  p.rep = parts.empty() ? zero_rep(a) : direct_sum(parts).rep;
  return p;
}

PMap zero_pmap(const BasedAlgebra& a, const std::vector<int>& src, const std::vector<int>& tgt) {
  PMap f;
  f.src = src;
  f.tgt = tgt;
  f.entry.assign(tgt.size(), std::vector<Vec>(src.size(), Vec(a.dim())));
  return f;
}

RepMor realize(const PMap& f, const ProjSum& src, const ProjSum& tgt) {
  const auto& a = *src.rep.algebra;
  RepMor m = zero_mor(src.rep, tgt.rep);
  for (std::size_t j = 0; j < f.src.size(); ++j)
    for (std::size_t i = 0; i < f.tgt.size(); ++i) {
      const Vec& x = f.entry[i][j];
      if (std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
      for (int u = 0; u < a.rank(); ++u) {
        const auto sb = elems(a, f.src[j], u);
        const auto tb = elems(a, f.tgt[i], u);
        for (std::size_t c = 0; c < sb.size(); ++c) {
          const Vec img = a.multiply(unit(a, sb[c]), x);
          for (std::size_t r = 0; r < tb.size(); ++r)
            if (!img[tb[r]].is_zero())
              m.blocks[u](tgt.offsets[i][u] + r, src.offsets[j][u] + c) += img[tb[r]];
        }
      }
    }
  return m;
}

PMap compose(const BasedAlgebra& a, const PMap& g, const PMap& f) {
  PMap h = zero_pmap(a, f.src, g.tgt);
  for (std::size_t k = 0; k < g.tgt.size(); ++k)
    for (std::size_t j = 0; j < f.src.size(); ++j)
      for (std::size_t i = 0; i < f.tgt.size(); ++i) {
        const Vec p = a.multiply(f.entry[i][j], g.entry[k][i]);
        for (int b = 0; b < a.dim(); ++b) h.entry[k][j][b] += p[b];
      }
  return h;
}

std::vector<PMap> pmap_basis(const BasedAlgebra& a, const std::vector<int>& src, const std::vector<int>& tgt) {
  std::vector<PMap> out;
  for (std::size_t i = 0; i < tgt.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      for (int b : elems(a, tgt[i], src[j])) {
        PMap f = zero_pmap(a, src, tgt);
        f.entry[i][j][b] = 1;
        out.push_back(std::move(f));
      }
  return out;
}

Vec flatten(const PMap& f) {
  Vec v;
  for (const auto& row : f.entry)
    for (const auto& e : row) v.insert(v.end(), e.begin(), e.end());
  return v;
}

PMap unflatten_pmap(const BasedAlgebra& a, const Vec& v, const std::vector<int>& src, const std::vector<int>& tgt) {
  PMap f = zero_pmap(a, src, tgt);
  std::size_t k = 0;
  for (auto& row : f.entry)
    for (auto& e : row)
      for (auto& s : e) s = v[k++];
  return f;
}

PMap block_diag(const BasedAlgebra& a, const std::vector<PMap>& parts) {
  std::vector<int> src, tgt;
  for (const auto& p : parts) {
    src.insert(src.end(), p.src.begin(), p.src.end());
    tgt.insert(tgt.end(), p.tgt.begin(), p.tgt.end());
  }
  PMap f = zero_pmap(a, src, tgt);
  std::size_t io = 0, jo = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.tgt.size(); ++i)
      for (std::size_t j = 0; j < p.src.size(); ++j) f.entry[io + i][jo + j] = p.entry[i][j];
    io += p.tgt.size();
    jo += p.src.size();
  }
  return f;
}

PMap vstack(const BasedAlgebra& a, const PMap& top, const PMap& bottom) {
  std::vector<int> tgt = top.tgt;
  tgt.insert(tgt.end(), bottom.tgt.begin(), bottom.tgt.end());
  PMap f = zero_pmap(a, top.src, tgt);
  for (std::size_t i = 0; i < top.tgt.size(); ++i) f.entry[i] = top.entry[i];
  for (std::size_t i = 0; i < bottom.tgt.size(); ++i) f.entry[top.tgt.size() + i] = bottom.entry[i];
  return f;
}

PMap hstack(const BasedAlgebra& a, const PMap& left, const PMap& right) {
  std::vector<int> src = left.src;
  src.insert(src.end(), right.src.begin(), right.src.end());
  PMap f = zero_pmap(a, src, left.tgt);
  for (std::size_t i = 0; i < left.tgt.size(); ++i) {
    for (std::size_t j = 0; j < left.src.size(); ++j) f.entry[i][j] = left.entry[i][j];
    for (std::size_t j = 0; j < right.src.size(); ++j) f.entry[i][left.src.size() + j] = right.entry[i][j];
  }
  return f;
}

// ---------------------------------------------------------------- presentations

std::pair<ProjSum, RepMor> projective_cover(const Rep& m) {
  const auto& a = *m.algebra;
  const auto rad = radical(m);
  std::vector<int> tops;
  std::vector<std::pair<int, std::size_t>> gens;  // (vertex, basis row)
  for (int v = 0; v < a.rank(); ++v)
    for (auto r : rad[v].free_rows()) {
      tops.push_back(v);
      gens.emplace_back(v, r);
    }
  ProjSum p = proj_sum(m.algebra, tops);
  RepMor pi = zero_mor(p.rep, m);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto [v, r] = gens[k];
    for (int u = 0; u < a.rank(); ++u) {
      const auto bs = elems(a, v, u);
      for (std::size_t c = 0; c < bs.size(); ++c) {
        const Mat& act = m.action[bs[c]];
        for (int i = 0; i < m.dims[u]; ++i) pi.blocks[u](i, p.offsets[k][u] + c) = act(i, r);
      }
    }
  }
  return {std::move(p), std::move(pi)};
}

namespace {

// A morphism between projective sums, read back as a PMap from the images
// of the summand tops.
PMap to_pmap(const RepMor& f, const ProjSum& src, const ProjSum& tgt) {
  const auto& a = *src.rep.algebra;
  PMap out = zero_pmap(a, src.tops, tgt.tops);
  for (std::size_t j = 0; j < src.tops.size(); ++j) {
    const int s = src.tops[j];
    const std::size_t col = src.offsets[j][s];  // the idempotent comes first in its block
    for (std::size_t i = 0; i < tgt.tops.size(); ++i) {
      const auto tb = elems(a, tgt.tops[i], s);
      for (std::size_t r = 0; r < tb.size(); ++r) out.entry[i][j][tb[r]] = f.blocks[s](tgt.offsets[i][s] + r, col);
    }
  }
  return out;
}

}  // namespace

ProjPres min_proj_pres(const Rep& m) {
  auto [p0, cover] = projective_cover(m);
  SubRep syz = kernel(cover, p0.rep, m);
  auto [p1, cover1] = projective_cover(syz.rep);
  const RepMor d = compose(syz.map, cover1);
  PMap dp = to_pmap(d, p1, p0);
  return {std::move(p1), std::move(p0), std::move(dp), std::move(cover), std::move(syz)};
}

Rep nakayama(const ProjSum& p) {
  std::vector<Rep> parts;
  for (int t : p.tops) parts.push_back(injective_rep(p.rep.algebra, t));
  return parts.empty() ? zero_rep(p.rep.algebra) : direct_sum(parts).rep;
}

RepMor nakayama(const PMap& f, const ProjSum& src, const ProjSum& tgt) {
  const auto& a = *src.rep.algebra;
  const int n = a.rank();
  // Offsets of the injective summands.
  const auto inj_offsets = [&](const std::vector<int>& tops) {
    std::vector<std::vector<int>> off;
    std::vector<int> run(n, 0);
    for (int t : tops) {
      std::vector<int> o(n);
      for (int u = 0; u < n; ++u) {
        o[u] = run[u];
        run[u] += static_cast<int>(elems(a, u, t).size());
      }
      off.push_back(std::move(o));
    }
    return off;
  };
  const auto so = inj_offsets(f.src), to = inj_offsets(f.tgt);
  const Rep is = nakayama(src), it = nakayama(tgt);
  RepMor m = zero_mor(is, it);
  for (std::size_t j = 0; j < f.src.size(); ++j)
    for (std::size_t i = 0; i < f.tgt.size(); ++i) {
      const Vec& x = f.entry[i][j];
      if (std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
      for (int u = 0; u < n; ++u) {
        const auto bs = elems(a, u, f.src[j]);  // dual basis of I(src_j) at u
        const auto cs = elems(a, u, f.tgt[i]);  // dual basis of I(tgt_i) at u
        for (std::size_t r = 0; r < cs.size(); ++r) {
          const Vec xc = a.multiply(x, unit(a, cs[r]));
          for (std::size_t c = 0; c < bs.size(); ++c)
            if (!xc[bs[c]].is_zero()) m.blocks[u](to[i][u] + r, so[j][u] + c) += coeff(xc, bs[c]);
        }
      }
    }
  return m;
}

Rep tau(const Rep& m) {
  if (m.total_dim() == 0) return m;
  const ProjPres p = min_proj_pres(m);
  if (p.p1.tops.empty()) return zero_rep(m.algebra);
  const RepMor nu = nakayama(p.d, p.p1, p.p0);
  return kernel(nu, nakayama(p.p1), nakayama(p.p0)).rep;
}

Rep tau_inv(const Rep& m, const AlgebraPtr& op) {
  const Rep t = tau(dualize(m, op));
  return dualize(t, m.algebra);
}

int ext1_dim(const Rep& x, const Rep& y) {
  if (x.total_dim() == 0 || y.total_dim() == 0) return 0;
  const ProjPres p = min_proj_pres(x);
  int hom_p0 = 0;
  for (int t : p.p0.tops) hom_p0 += y.dims[t];
  return hom_dim(p.syzygy.rep, y) - hom_p0 + hom_dim(x, y);
}

bool as_criterion(const Rep& n, const Rep& m) { return hom_dim(n, tau(m)) == 0; }

// ---------------------------------------------------------------- shifted objects

void ShiftedObject::normalize() { std::sort(items.begin(), items.end()); }

bool ShiftedObject::basic() const { return std::adjacent_find(items.begin(), items.end()) == items.end(); }

const ProjPres& presentation(ModuleCategory& c, IndecId x) {
  auto& cache = c.cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.pres.find(x.value); it != cache.pres.end()) return *it->second;
  }
  auto p = std::make_shared<const ProjPres>(min_proj_pres(c.rep(x)));
  std::lock_guard lock(cache.mu);
  return *cache.pres.emplace(x.value, std::move(p)).first->second;
}

const Rep& tau_rep(ModuleCategory& c, IndecId x) {
  auto& cache = c.cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.tau.find(x.value); it != cache.tau.end()) return it->second;
  }
  Rep t = tau(c.rep(x));
  std::lock_guard lock(cache.mu);
  return cache.tau.emplace(x.value, std::move(t)).first->second;
}

std::vector<IndecId> tau_summands(ModuleCategory& c, IndecId x) {
  auto& cache = c.cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.tau_ids.find(x.value); it != cache.tau_ids.end()) return it->second;
  }
  auto ids = c.decompose(tau_rep(c, x));
  std::lock_guard lock(cache.mu);
  return cache.tau_ids.emplace(x.value, std::move(ids)).first->second;
}

std::vector<IndecId> tau_inv_summands(ModuleCategory& c, IndecId x) {
  auto& cache = c.cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.tau_inv_ids.find(x.value); it != cache.tau_inv_ids.end()) return it->second;
  }
  const Rep t = tau_inv(c.rep(x), c.opposite().algebra_ptr());
  auto ids = c.decompose(t);
  std::lock_guard lock(cache.mu);
  return cache.tau_inv_ids.emplace(x.value, std::move(ids)).first->second;
}

ShiftedObject tau_bar(ModuleCategory& c, const ShiftedObject& u) {
  ShiftedObject out;
  for (const auto& s : u.items) {
    const auto pv = c.projective_vertex(s.id);
    if (s.shift == 1) {
      if (!pv) throw std::invalid_argument("shifted summand is not projective");
      out.items.push_back({c.injective(*pv), 0});
    } else if (s.shift == 0) {
      if (pv) {
        out.items.push_back({c.injective(*pv), -1});
      } else {
        for (auto t : tau_summands(c, s.id)) out.items.push_back({t, 0});
      }
    } else {
      throw std::invalid_argument("tau_bar expects shifts 0 or 1");
    }
  }
  out.normalize();
  return out;
}

ShiftedObject tau_bar_inv(ModuleCategory& c, const ShiftedObject& u) {
  ShiftedObject out;
  for (const auto& s : u.items) {
    const auto iv = c.injective_vertex(s.id);
    if (s.shift == -1) {
      if (!iv) throw std::invalid_argument("negatively shifted summand is not injective");
      out.items.push_back({c.projective(*iv), 0});
    } else if (s.shift == 0) {
      if (iv) {
        out.items.push_back({c.projective(*iv), 1});
      } else {
        for (auto t : tau_inv_summands(c, s.id)) out.items.push_back({t, 0});
      }
    } else {
      throw std::invalid_argument("tau_bar_inv expects shifts 0 or -1");
    }
  }
  out.normalize();
  return out;
}

std::string describe(ModuleCategory& c, const ShiftedObject& u) {
  if (u.items.empty()) return "0";
  std::string s;
  for (const auto& it : u.items) {
    if (!s.empty()) s += " + ";
    s += c.name(it.id);
    if (it.shift != 0) s += "[" + std::to_string(it.shift) + "]";
  }
  return s;
}

}  // namespace tautilt
