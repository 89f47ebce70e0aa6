// Brute-force reference implementations for small representation-finite
// algebras. Everything here works from the multiplication table and plain
// linear algebra; nothing goes through projective presentations or τ.
#pragma once

#include <algorithm>
#include <vector>

#include "tautilt/rep.hpp"

namespace oracle {

using namespace tautilt;

/// The interval module on [lo, hi] (0-based, inclusive) of a linear quiver
/// 1 -> 2 -> ... -> n, identity maps inside the interval.
inline Rep interval(const AlgebraPtr& a, int lo, int hi) {
  std::vector<int> dims(a->rank(), 0);
  for (int v = lo; v <= hi; ++v) dims[v] = 1;
  std::vector<Mat> acts;
  for (int g : a->generators()) {
    const auto& e = a->basis(g);
    Mat m(dims[e.target], dims[e.source]);
    if (dims[e.target] && dims[e.source]) m(0, 0) = 1;
    acts.push_back(std::move(m));
  }
  return from_generators(a, dims, acts);
}

/// All intervals with at most max_len vertices: the indecomposables of a
/// linear quiver with radical^max_len = 0.
inline std::vector<Rep> intervals(const AlgebraPtr& a, int max_len) {
  std::vector<Rep> out;
  const int n = a->rank();
  for (int lo = 0; lo < n; ++lo)
    for (int hi = lo; hi < n && hi - lo < max_len; ++hi) out.push_back(interval(a, lo, hi));
  return out;
}

namespace detail {

inline std::vector<int> offsets(const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> off(rows.size() + 1, 0);
  for (std::size_t v = 0; v < rows.size(); ++v) off[v + 1] = off[v] + rows[v] * cols[v];
  return off;
}

// g = (g_v : X_v -> Y_v) maps to (Y(b) g_s - g_t X(b))_b over radical basis elements.
inline Mat hom_system(const Rep& x, const Rep& y) {
  const BasedAlgebra& a = *x.algebra;
  std::vector<int> yd = y.dims, xd = x.dims;
  const auto off = offsets(yd, xd);
  int rows = 0;
  for (int b = a.rank(); b < a.dim(); ++b) rows += yd[a.basis(b).target] * xd[a.basis(b).source];
  Mat m(rows, off.back());
  int r = 0;
  for (int b = a.rank(); b < a.dim(); ++b) {
    const int s = a.basis(b).source, t = a.basis(b).target;
    const Mat& yb = y.action[b];
    const Mat& xb = x.action[b];
    for (int i = 0; i < yd[t]; ++i)
      for (int j = 0; j < xd[s]; ++j, ++r) {
        for (int k = 0; k < yd[s]; ++k) m(r, off[s] + k * xd[s] + j) += yb(i, k);
        for (int k = 0; k < xd[t]; ++k) m(r, off[t] + i * xd[t] + k) -= xb(k, j);
      }
  }
  return m;
}

}  // namespace detail

/// Basis of Hom(X, Y) as per-vertex blocks.
inline std::vector<std::vector<Mat>> hom(const Rep& x, const Rep& y) {
  const auto off = detail::offsets(y.dims, x.dims);
  std::vector<std::vector<Mat>> out;
  for (const Vec& v : kernel_basis(detail::hom_system(x, y))) {
    std::vector<Mat> f;
    for (std::size_t w = 0; w < x.dims.size(); ++w) {
      Mat b(y.dims[w], x.dims[w]);
      for (int i = 0; i < y.dims[w]; ++i)
        for (int j = 0; j < x.dims[w]; ++j) b(i, j) = v[off[w] + i * x.dims[w] + j];
      f.push_back(std::move(b));
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline int hom_dim(const Rep& x, const Rep& y) { return static_cast<int>(hom(x, y).size()); }

/// dim Ext^1(X, Y) = dim Der_0(A, Hom_K(X, Y)) - dim Inn, derivations
/// vanishing on the idempotents.
inline int ext1(const Rep& x, const Rep& y) {
  const BasedAlgebra& a = *x.algebra;
  const int n = a.rank();
  std::vector<int> off(a.dim() + 1, 0);
  for (int b = 0; b < a.dim(); ++b)
    off[b + 1] = off[b] + (b < n ? 0 : y.dims[a.basis(b).target] * x.dims[a.basis(b).source]);
  const int unknowns = off.back();
  std::vector<Vec> rows;
  for (int xb = n; xb < a.dim(); ++xb)
    for (int yb = n; yb < a.dim(); ++yb) {
      const auto& ex = a.basis(xb);
      const auto& ey = a.basis(yb);
      if (ey.target != ex.source) continue;
      const int s = ey.source, t = ex.target, mid = ey.target;
      // d(x*y) - Y(x) d(y) - d(x) X(y) = 0
      for (int i = 0; i < y.dims[t]; ++i)
        for (int j = 0; j < x.dims[s]; ++j) {
          Vec row(unknowns);
          for (const auto& [b, coeff] : a.product(xb, yb)) row[off[b] + i * x.dims[s] + j] += coeff;
          for (int k = 0; k < y.dims[mid]; ++k) row[off[yb] + k * x.dims[s] + j] -= y.action[xb](i, k);
          for (int k = 0; k < x.dims[mid]; ++k) row[off[xb] + i * x.dims[mid] + k] -= x.action[yb](k, j);
          rows.push_back(std::move(row));
        }
    }
  int der = unknowns;
  if (!rows.empty()) {
    Mat m(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int k = 0; k < unknowns; ++k) m(r, k) = rows[r][k];
    der -= static_cast<int>(rank(m));
  }
  return der - static_cast<int>(rank(detail::hom_system(x, y)));
}

/// X ∈ Gen(ms): the images of all maps from the ms span X at every vertex.
inline bool in_gen(const std::vector<Rep>& ms, const Rep& x) {
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    if (x.dims[v] == 0) continue;
    Mat span(x.dims[v], 0);
    for (const Rep& m : ms)
      for (const auto& f : hom(m, x)) span = Mat::hcat(span, f[v]);
    if (static_cast<int>(rank(span)) < x.dims[v]) return false;
  }
  return true;
}

/// Indices into `indec` of the indecomposables in Gen(ms).
inline std::vector<int> gen_closure(const std::vector<Rep>& ms, const std::vector<Rep>& indec) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(indec.size()); ++i)
    if (in_gen(ms, indec[i])) out.push_back(i);
  return out;
}

/// Ext^1(M, Gen M) = 0, the Auslander-Smalø form of τ-rigidity.
inline bool tau_rigid(const std::vector<Rep>& ms, const std::vector<Rep>& indec) {
  for (int i : gen_closure(ms, indec))
    for (const Rep& m : ms)
      if (ext1(m, indec[i]) != 0) return false;
  return true;
}

struct Pair {
  std::vector<int> modules;   // indices into indec
  std::vector<int> shifted;   // vertices of P[1]
  friend bool operator==(const Pair&, const Pair&) = default;
};

inline bool vanishes_on(const Rep& x, const std::vector<int>& vertices) {
  return std::all_of(vertices.begin(), vertices.end(), [&](int v) { return x.dims[v] == 0; });
}

/// All support τ-tilting pairs by subset enumeration.
inline std::vector<Pair> support_tau_tilting(const std::vector<Rep>& indec, int n) {
  std::vector<Pair> out;
  const int k = static_cast<int>(indec.size());
  for (unsigned ms = 0; ms < (1u << k); ++ms) {
    std::vector<int> mods;
    std::vector<Rep> reps;
    for (int i = 0; i < k; ++i)
      if (ms >> i & 1) {
        mods.push_back(i);
        reps.push_back(indec[i]);
      }
    if (static_cast<int>(mods.size()) > n || !tau_rigid(reps, indec)) continue;
    for (unsigned ps = 0; ps < (1u << n); ++ps) {
      std::vector<int> verts;
      for (int v = 0; v < n; ++v)
        if (ps >> v & 1) verts.push_back(v);
      if (mods.size() + verts.size() != static_cast<std::size_t>(n)) continue;
      if (std::all_of(reps.begin(), reps.end(), [&](const Rep& r) { return vanishes_on(r, verts); }))
        out.push_back({mods, verts});
    }
  }
  return out;
}

/// The support τ-tilting pair of a functorially finite torsion class given by
/// its indecomposables: Ext-projectives plus the vertices where T vanishes.
inline Pair pair_of_torsion_class(const std::vector<int>& t, const std::vector<Rep>& indec, int n) {
  Pair p;
  for (int i : t)
    if (std::all_of(t.begin(), t.end(), [&](int j) { return ext1(indec[i], indec[j]) == 0; })) p.modules.push_back(i);
  for (int v = 0; v < n; ++v)
    if (std::all_of(t.begin(), t.end(), [&](int j) { return indec[j].dims[v] == 0; })) p.shifted.push_back(v);
  return p;
}

/// Bongartz completion of M ⊔ P[1]: the torsion class ⊥(τM) ∩ P^⊥, with
/// Hom(N, τM) = 0 read as Ext^1(M, Gen N) = 0.
inline Pair bongartz(const std::vector<int>& m, const std::vector<int>& p, const std::vector<Rep>& indec, int n) {
  std::vector<int> t;
  for (int i = 0; i < static_cast<int>(indec.size()); ++i) {
    if (!vanishes_on(indec[i], p)) continue;
    bool ok = true;
    for (int j : gen_closure({indec[i]}, indec))
      for (int k : m) ok = ok && ext1(indec[k], indec[j]) == 0;
    if (ok) t.push_back(i);
  }
  return pair_of_torsion_class(t, indec, n);
}

/// Co-Bongartz completion: the torsion class Gen M.
inline Pair co_bongartz(const std::vector<int>& m, const std::vector<Rep>& indec, int n) {
  std::vector<Rep> reps;
  for (int i : m) reps.push_back(indec[i]);
  return pair_of_torsion_class(gen_closure(reps, indec), indec, n);
}

}  // namespace oracle
