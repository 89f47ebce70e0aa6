#include "tautilt/rep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "tautilt/cache.hpp"

namespace tautilt {

// ---------------------------------------------------------------- Rep basics

int Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

std::vector<int> Rep::offsets() const {
  std::vector<int> off(dims.size() + 1, 0);
  for (std::size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
  return off;
}

Mat Rep::full_action(int b) const {
  const auto off = offsets();
  const int n = total_dim();
  Mat m(n, n);
  const auto& e = algebra->basis(b);
  m.set_block(off[e.target], off[e.source], action[b]);
  return m;
}

Mat RepMor::full(const Rep& source, const Rep& target) const {
  const auto so = source.offsets(), to = target.offsets();
  Mat m(target.total_dim(), source.total_dim());
  for (std::size_t v = 0; v < blocks.size(); ++v) m.set_block(to[v], so[v], blocks[v]);
  return m;
}

std::string dims_string(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

namespace {

Rep empty_rep(const AlgebraPtr& a, std::vector<int> dims) {
  Rep r;
  r.algebra = a;
  r.dims = std::move(dims);
  r.action.resize(a->dim());
  for (int b = 0; b < a->dim(); ++b) {
    const auto& e = a->basis(b);
    r.action[b] = a->is_idempotent(b) ? Mat::identity(r.dims[b]) : Mat(r.dims[e.target], r.dims[e.source]);
  }
  return r;
}

Scalar coeff(const SparseVec& v, int k) {
  for (const auto& [i, c] : v)
    if (i == k) return c;
  return Scalar(0);
}

}  // namespace

Rep zero_rep(const AlgebraPtr& a) { return empty_rep(a, std::vector<int>(a->rank(), 0)); }

Rep projective_rep(const AlgebraPtr& a, int v) {
  const int n = a->rank();
  std::vector<std::vector<int>> at(n);  // basis elements with source v, by target
  for (int b = 0; b < a->dim(); ++b)
    if (a->basis(b).source == v) at[a->basis(b).target].push_back(b);
  std::vector<int> dims(n);
  for (int t = 0; t < n; ++t) dims[t] = static_cast<int>(at[t].size());
  Rep r = empty_rep(a, dims);
  for (int c = a->rank(); c < a->dim(); ++c) {
    const auto& e = a->basis(c);
    Mat& m = r.action[c];
    for (std::size_t j = 0; j < at[e.source].size(); ++j)
      for (const auto& [k, val] : a->product(c, at[e.source][j])) {
        const auto it = std::find(at[e.target].begin(), at[e.target].end(), k);
        m(static_cast<std::size_t>(it - at[e.target].begin()), j) += val;
      }
  }
  return r;
}

Rep injective_rep(const AlgebraPtr& a, int v) {
  const int n = a->rank();
  std::vector<std::vector<int>> at(n);  // basis elements with target v, by source
  for (int b = 0; b < a->dim(); ++b)
    if (a->basis(b).target == v) at[a->basis(b).source].push_back(b);
  std::vector<int> dims(n);
  for (int s = 0; s < n; ++s) dims[s] = static_cast<int>(at[s].size());
  Rep r = empty_rep(a, dims);
  for (int c = a->rank(); c < a->dim(); ++c) {
    const auto& e = a->basis(c);
    Mat& m = r.action[c];
    // (c.phi)(x) = phi(x c) for x in e_v A e_{t(c)}.
    for (std::size_t i = 0; i < at[e.target].size(); ++i)
      for (std::size_t j = 0; j < at[e.source].size(); ++j)
        m(i, j) = coeff(a->product(at[e.target][i], c), at[e.source][j]);
  }
  return r;
}

Rep simple_rep(const AlgebraPtr& a, int v) {
  std::vector<int> dims(a->rank(), 0);
  dims[v] = 1;
  return empty_rep(a, dims);
}

Rep dualize(const Rep& x, const AlgebraPtr& op) {
  Rep r;
  r.algebra = op;
  r.dims = x.dims;
  r.action.resize(op->dim());
  for (int b = 0; b < op->dim(); ++b) r.action[b] = x.action[b].transpose();
  return r;
}

RepMor dualize(const RepMor& f) {
  RepMor g;
  for (const auto& b : f.blocks) g.blocks.push_back(b.transpose());
  return g;
}

Rep from_generators(const AlgebraPtr& a, std::vector<int> dims, const std::vector<Mat>& gen_actions) {
  if (static_cast<int>(dims.size()) != a->rank()) throw std::invalid_argument("dimension vector has wrong length");
  const auto& gens = a->generators();
  if (gen_actions.size() != gens.size()) throw std::invalid_argument("wrong number of generator actions");
  Rep r = empty_rep(a, std::move(dims));
  std::map<int, std::size_t> pos;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& e = a->basis(gens[k]);
    if (gen_actions[k].rows() != static_cast<std::size_t>(r.dims[e.target]) ||
        gen_actions[k].cols() != static_cast<std::size_t>(r.dims[e.source]))
      throw std::invalid_argument("action of " + e.label + " has wrong shape");
    pos[gens[k]] = k;
  }
  for (int b = a->rank(); b < a->dim(); ++b) {
    const auto& e = a->basis(b);
    Mat acc(r.dims[e.target], r.dims[e.source]);
    for (const auto& term : a->expansion(b)) {
      Mat m = gen_actions[pos.at(term.word.front())];
      for (std::size_t i = 1; i < term.word.size(); ++i) m = gen_actions[pos.at(term.word[i])] * m;
      acc += m * term.coeff;
    }
    r.action[b] = std::move(acc);
  }
  validate(r);
  return r;
}

void validate(const Rep& x) {
  const auto& a = *x.algebra;
  if (static_cast<int>(x.dims.size()) != a.rank()) throw std::invalid_argument("dimension vector has wrong length");
  if (static_cast<int>(x.action.size()) != a.dim()) throw std::invalid_argument("missing basis actions");
  for (int b = 0; b < a.dim(); ++b) {
    const auto& e = a.basis(b);
    if (x.action[b].rows() != static_cast<std::size_t>(x.dims[e.target]) ||
        x.action[b].cols() != static_cast<std::size_t>(x.dims[e.source]))
      throw std::invalid_argument("action of " + e.label + " has wrong shape");
    if (a.is_idempotent(b) && x.action[b] != Mat::identity(x.dims[b]))
      throw std::invalid_argument("idempotent does not act as identity");
  }
  for (int p = 0; p < a.dim(); ++p)
    for (int q = 0; q < a.dim(); ++q) {
      if (a.basis(q).target != a.basis(p).source) continue;
      const auto& e = a.basis(q);
      Mat rhs(x.dims[a.basis(p).target], x.dims[e.source]);
      for (const auto& [k, c] : a.product(p, q)) rhs += x.action[k] * c;
      if (x.action[p] * x.action[q] != rhs)
        throw std::invalid_argument("actions violate the relation for " + a.basis(p).label + "*" + e.label);
    }
}

// ---------------------------------------------------------------- morphisms

RepMor identity(const Rep& x) {
  RepMor f;
  for (int d : x.dims) f.blocks.push_back(Mat::identity(d));
  return f;
}

RepMor zero_mor(const Rep& x, const Rep& y) {
  RepMor f;
  for (std::size_t v = 0; v < x.dims.size(); ++v) f.blocks.emplace_back(y.dims[v], x.dims[v]);
  return f;
}

RepMor compose(const RepMor& g, const RepMor& f) {
  RepMor h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return h;
}

RepMor add(const RepMor& f, const RepMor& g) {
  RepMor h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] + g.blocks[v]);
  return h;
}

RepMor scale(const RepMor& f, const Scalar& c) {
  RepMor h;
  for (const auto& b : f.blocks) h.blocks.push_back(b * c);
  return h;
}

RepMor combine(const std::vector<RepMor>& fs, const std::vector<Scalar>& coeffs, const Rep& x, const Rep& y) {
  RepMor h = zero_mor(x, y);
  for (std::size_t k = 0; k < fs.size(); ++k)
    if (!coeffs[k].is_zero())
      for (std::size_t v = 0; v < h.blocks.size(); ++v) h.blocks[v] += fs[k].blocks[v] * coeffs[k];
  return h;
}

bool is_zero(const RepMor& f) {
  return std::all_of(f.blocks.begin(), f.blocks.end(), [](const Mat& m) { return m.is_zero(); });
}

bool is_mono(const RepMor& f) {
  return std::all_of(f.blocks.begin(), f.blocks.end(), [](const Mat& m) { return rank(m) == m.cols(); });
}

bool is_epi(const RepMor& f) {
  return std::all_of(f.blocks.begin(), f.blocks.end(), [](const Mat& m) { return rank(m) == m.rows(); });
}

bool is_iso(const RepMor& f) {
  return std::all_of(f.blocks.begin(), f.blocks.end(),
                     [](const Mat& m) { return m.is_square() && rank(m) == m.rows(); });
}

bool is_morphism(const RepMor& f, const Rep& x, const Rep& y) {
  const auto& a = *x.algebra;
  if (f.blocks.size() != x.dims.size()) return false;
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    if (f.blocks[v].rows() != static_cast<std::size_t>(y.dims[v]) ||
        f.blocks[v].cols() != static_cast<std::size_t>(x.dims[v]))
      return false;
  for (int g : a.generators()) {
    const auto& e = a.basis(g);
    if (f.blocks[e.target] * x.action[g] != y.action[g] * f.blocks[e.source]) return false;
  }
  return true;
}

RepMor inverse(const RepMor& f) {
  RepMor g;
  for (const auto& b : f.blocks) g.blocks.push_back(inverse(b));
  return g;
}

Vec flatten(const RepMor& f) {
  Vec v;
  for (const auto& b : f.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
  return v;
}

RepMor unflatten(const Vec& v, const Rep& x, const Rep& y) {
  RepMor f = zero_mor(x, y);
  std::size_t k = 0;
  for (auto& b : f.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = v[k++];
  return f;
}

std::vector<RepMor> hom_basis(const Rep& x, const Rep& y) {
  const auto& a = *x.algebra;
  const int n = a.rank();
  std::vector<std::size_t> off(n + 1, 0);
  for (int v = 0; v < n; ++v) off[v + 1] = off[v] + static_cast<std::size_t>(y.dims[v]) * x.dims[v];
  const std::size_t unknowns = off[n];
  std::vector<RepMor> out;
  if (unknowns == 0) return out;
  std::size_t eqs = 0;
  for (int g : a.generators()) {
    const auto& e = a.basis(g);
    eqs += static_cast<std::size_t>(y.dims[e.target]) * x.dims[e.source];
  }
  Mat m(eqs, unknowns);
  std::size_t row = 0;
  for (int g : a.generators()) {
    const auto& e = a.basis(g);
    const int s = e.source, t = e.target;
    const Mat& xa = x.action[g];  // X_t x X_s
    const Mat& ya = y.action[g];  // Y_t x Y_s
    // (F_t X_g - Y_g F_s)(i, j) = 0
    for (int i = 0; i < y.dims[t]; ++i)
      for (int j = 0; j < x.dims[s]; ++j, ++row) {
        for (int k = 0; k < x.dims[t]; ++k)
          if (!xa(k, j).is_zero()) m(row, off[t] + static_cast<std::size_t>(i) * x.dims[t] + k) += xa(k, j);
        for (int k = 0; k < y.dims[s]; ++k)
          if (!ya(i, k).is_zero()) m(row, off[s] + static_cast<std::size_t>(k) * x.dims[s] + j) -= ya(i, k);
      }
  }
  for (const auto& v : kernel_basis(m)) out.push_back(unflatten(v, x, y));
  return out;
}

int hom_dim(const Rep& x, const Rep& y) { return static_cast<int>(hom_basis(x, y).size()); }

// ---------------------------------------------------------------- sub and quotient

VertexSpaces closure(const Rep& x, VertexSpaces s) {
  const auto& a = *x.algebra;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int g : a.generators()) {
      const auto& e = a.basis(g);
      if (s[e.source].dim() == 0) continue;
      const Mat img = x.action[g] * s[e.source].basis();
      const Subspace grown = s[e.target] + Subspace::span(img);
      if (grown.dim() != s[e.target].dim()) {
        s[e.target] = grown;
        changed = true;
      }
    }
  }
  return s;
}

SubRep subrep_of(const Rep& x, const VertexSpaces& s) {
  const auto& a = *x.algebra;
  std::vector<int> dims;
  for (const auto& sp : s) dims.push_back(static_cast<int>(sp.dim()));
  SubRep out{empty_rep(x.algebra, dims), {}};
  for (int b = a.rank(); b < a.dim(); ++b) {
    const auto& e = a.basis(b);
    if (dims[e.source] == 0 || dims[e.target] == 0) continue;
    const Mat img = x.action[b] * s[e.source].basis();
    out.rep.action[b] = img.select_rows(s[e.target].pivot_rows());
  }
  for (const auto& sp : s) out.map.blocks.push_back(sp.basis());
  return out;
}

SubRep subrep_from_vectors(const Rep& x, const std::vector<Mat>& gens) {
  VertexSpaces s;
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    s.push_back(gens[v].cols() ? Subspace::span(gens[v]) : Subspace(x.dims[v]));
  return subrep_of(x, closure(x, std::move(s)));
}

SubRep quotient_by_subrep(const Rep& x, const VertexSpaces& s) {
  const auto& a = *x.algebra;
  std::vector<Mat> q;
  std::vector<std::vector<std::size_t>> free;
  std::vector<int> dims;
  for (const auto& sp : s) {
    q.push_back(sp.quotient_map());
    free.push_back(sp.free_rows());
    dims.push_back(static_cast<int>(free.back().size()));
  }
  SubRep out{empty_rep(x.algebra, dims), {}};
  for (int b = a.rank(); b < a.dim(); ++b) {
    const auto& e = a.basis(b);
    if (dims[e.source] == 0 || dims[e.target] == 0) continue;
    Mat lift(x.dims[e.source], dims[e.source]);
    for (std::size_t j = 0; j < free[e.source].size(); ++j) lift(free[e.source][j], j) = 1;
    out.rep.action[b] = q[e.target] * (x.action[b] * lift);
  }
  out.map.blocks = std::move(q);
  return out;
}

SubRep kernel(const RepMor& f, const Rep& x, const Rep&) {
  VertexSpaces s;
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    const auto ker = kernel_basis(f.blocks[v]);
    s.push_back(ker.empty() ? Subspace(x.dims[v]) : Subspace::span(Mat::from_columns(ker, x.dims[v])));
  }
  return subrep_of(x, s);
}

namespace {
VertexSpaces image_spaces(const RepMor& f, const Rep& y) {
  VertexSpaces s;
  for (std::size_t v = 0; v < y.dims.size(); ++v)
    s.push_back(f.blocks[v].cols() ? Subspace::span(f.blocks[v]) : Subspace(y.dims[v]));
  return s;
}
}  // namespace

SubRep cokernel(const RepMor& f, const Rep&, const Rep& y) { return quotient_by_subrep(y, image_spaces(f, y)); }

SubRep image(const RepMor& f, const Rep&, const Rep& y) { return subrep_of(y, image_spaces(f, y)); }

DirectSum direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of no modules");
  const AlgebraPtr& alg = parts[0].algebra;
  const int n = alg->rank();
  std::vector<int> dims(n, 0);
  for (const auto& p : parts)
    for (int v = 0; v < n; ++v) dims[v] += p.dims[v];
  DirectSum ds{empty_rep(alg, dims), {}, {}};
  std::vector<int> off(n, 0);
  for (const auto& p : parts) {
    for (int b = n; b < alg->dim(); ++b) {
      const auto& e = alg->basis(b);
      ds.rep.action[b].set_block(off[e.target], off[e.source], p.action[b]);
    }
    RepMor inj, proj;
    for (int v = 0; v < n; ++v) {
      Mat i(dims[v], p.dims[v]), q(p.dims[v], dims[v]);
      for (int k = 0; k < p.dims[v]; ++k) {
        i(off[v] + k, k) = 1;
        q(k, off[v] + k) = 1;
      }
      inj.blocks.push_back(std::move(i));
      proj.blocks.push_back(std::move(q));
    }
    ds.inj.push_back(std::move(inj));
    ds.proj.push_back(std::move(proj));
    for (int v = 0; v < n; ++v) off[v] += p.dims[v];
  }
  return ds;
}

Rep power(const Rep& x, int k) {
  if (k == 0) return zero_rep(x.algebra);
  return direct_sum(std::vector<Rep>(k, x)).rep;
}

VertexSpaces radical(const Rep& x) {
  const auto& a = *x.algebra;
  VertexSpaces s;
  for (int d : x.dims) s.emplace_back(d);
  for (int g : a.generators()) {
    const auto& e = a.basis(g);
    if (x.dims[e.source] && x.dims[e.target]) s[e.target] = s[e.target] + Subspace::span(x.action[g]);
  }
  return s;
}

std::vector<int> top_dims(const Rep& x) {
  const auto r = radical(x);
  std::vector<int> t;
  for (std::size_t v = 0; v < x.dims.size(); ++v) t.push_back(x.dims[v] - static_cast<int>(r[v].dim()));
  return t;
}

VertexSpaces trace_spaces(const Rep& m, const Rep& x) {
  VertexSpaces s;
  for (int d : x.dims) s.emplace_back(d);
  for (const auto& f : hom_basis(m, x))
    for (std::size_t v = 0; v < x.dims.size(); ++v)
      if (f.blocks[v].cols() && x.dims[v]) s[v] = s[v] + Subspace::span(f.blocks[v]);
  return s;
}

SubRep trace_in(const Rep& m, const Rep& x) { return subrep_of(x, trace_spaces(m, x)); }

SubRep reject_in(const Rep& m, const Rep& x) {
  const auto hs = hom_basis(x, m);
  VertexSpaces s;
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    std::size_t rows = 0;
    for (const auto& h : hs) rows += h.blocks[v].rows();
    Mat stacked(rows, x.dims[v]);
    std::size_t r = 0;
    for (const auto& h : hs) {
      stacked.set_block(r, 0, h.blocks[v]);
      r += h.blocks[v].rows();
    }
    const auto ker = kernel_basis(stacked);
    s.push_back(ker.empty() ? Subspace(x.dims[v]) : Subspace::span(Mat::from_columns(ker, x.dims[v])));
  }
  return quotient_by_subrep(x, s);
}

// ---------------------------------------------------------------- endomorphisms

std::vector<Vec> trace_form_radical(const std::vector<Mat>& elems) {
  const std::size_t k = elems.size();
  Mat g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Scalar t;
      const Mat& a = elems[i];
      const Mat& b = elems[j];
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
          if (!a(r, c).is_zero() && !b(c, r).is_zero()) t += a(r, c) * b(c, r);
      g(i, j) = t;
      g(j, i) = t;
    }
  return kernel_basis(g);
}

namespace {
Mat as_block_diag(const RepMor& f) {
  std::size_t n = 0;
  for (const auto& b : f.blocks) n += b.rows();
  Mat m(n, n);
  std::size_t o = 0;
  for (const auto& b : f.blocks) {
    m.set_block(o, o, b);
    o += b.rows();
  }
  return m;
}
}  // namespace

EndData endomorphisms(const Rep& x) {
  EndData e;
  e.basis = hom_basis(x, x);
  std::vector<Mat> ms;
  for (const auto& f : e.basis) ms.push_back(as_block_diag(f));
  e.radical = trace_form_radical(ms);
  return e;
}

// ---------------------------------------------------------------- isomorphism

std::optional<RepMor> find_iso(const Rep& x, const Rep& y, Rng& rng) {
  if (x.dims != y.dims) return std::nullopt;
  if (x.total_dim() == 0) return zero_mor(x, y);
  const auto hs = hom_basis(x, y);
  if (hs.empty()) return std::nullopt;
  for (const auto& h : hs)
    if (is_iso(h)) return h;
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < hs.size(); ++k) c.emplace_back(dist(rng));
    RepMor f = combine(hs, c, x, y);
    if (is_iso(f)) return f;
  }
  // Deterministic fallback over {-1, 0, 1, 2}^k, bounded.
  const std::size_t k = hs.size();
  std::vector<int> digits(k, 0);
  for (int count = 0; count < 4096; ++count) {
    std::size_t i = 0;
    while (i < k && ++digits[i] == 4) digits[i++] = 0;
    if (i == k) break;
    std::vector<Scalar> c;
    for (int d : digits) c.emplace_back(d - 1);
    RepMor f = combine(hs, c, x, y);
    if (is_iso(f)) return f;
  }
  return std::nullopt;
}

bool iso(const Rep& x, const Rep& y, Rng& rng) { return find_iso(x, y, rng).has_value(); }

// ---------------------------------------------------------------- splitting

namespace {

bool nilpotent(const RepMor& f) {
  for (const auto& b : f.blocks)
    if (b.rows() && !power(b, static_cast<unsigned>(b.rows())).is_zero()) return false;
  return true;
}

bool singular(const RepMor& f) {
  for (const auto& b : f.blocks)
    if (b.rows() && rank(b) < b.rows()) return true;
  return false;
}

// Fitting decomposition along a non-nilpotent, non-invertible endomorphism.
std::pair<SubRep, SubRep> fitting(const Rep& x, const RepMor& psi) {
  VertexSpaces k, im;
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    const std::size_t d = x.dims[v];
    if (d == 0) {
      k.emplace_back(0);
      im.emplace_back(0);
      continue;
    }
    const Mat p = power(psi.blocks[v], static_cast<unsigned>(d));
    const auto ker = kernel_basis(p);
    k.push_back(ker.empty() ? Subspace(d) : Subspace::span(Mat::from_columns(ker, d)));
    im.push_back(Subspace::span(p));
  }
  return {subrep_of(x, k), subrep_of(x, im)};
}

std::optional<RepMor> splitting_element(const Rep& x, const EndData& end, Rng& rng) {
  const auto usable = [&](const RepMor& f) { return singular(f) && !nilpotent(f); };
  // Shift by a rational eigenvalue so the element becomes singular.
  const auto shifted = [&](const RepMor& f) -> std::optional<RepMor> {
    if (usable(f)) return f;
    if (nilpotent(f)) return std::nullopt;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) {
      const Mat& b = f.blocks[v];
      if (b.rows() == 0) continue;
      Vec u(b.rows());
      std::uniform_int_distribution<long> dist(-3, 3);
      for (auto& s : u) s = Scalar(dist(rng));
      if (std::all_of(u.begin(), u.end(), [](const Scalar& s) { return s.is_zero(); })) u[0] = 1;
      for (const auto& lambda : rational_roots(krylov_annihilator(b, u))) {
        RepMor g = add(f, scale(identity(x), -lambda));
        if (usable(g)) return g;
      }
    }
    return std::nullopt;
  };
  for (const auto& f : end.basis)
    if (auto g = shifted(f)) return g;
  std::uniform_int_distribution<long> small(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Scalar> c;
    for (int k = 0; k < end.dim(); ++k) c.emplace_back(small(rng));
    if (auto g = shifted(combine(end.basis, c, x, x))) return g;
  }
  // Annihilators of single vectors: nonzero elements killing v are singular.
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    const int d = x.dims[v];
    for (int trial = 0; trial < 2 * d + 4; ++trial) {
      Vec u(d);
      if (trial < d) {
        u[trial] = 1;
      } else {
        std::uniform_int_distribution<long> dist(-4, 4);
        for (auto& s : u) s = Scalar(dist(rng));
      }
      std::vector<Vec> cols;
      for (const auto& f : end.basis) cols.push_back(f.blocks[v] * u);
      const auto ann = kernel_basis(Mat::from_columns(cols, d));
      if (ann.empty()) continue;
      for (int rep = 0; rep < 4; ++rep) {
        std::vector<Scalar> c(end.dim());
        for (const auto& a : ann) {
          const Scalar w(small(rng));
          for (int k = 0; k < end.dim(); ++k) c[k] += a[k] * w;
        }
        RepMor g = combine(end.basis, c, x, x);
        if (usable(g)) return g;
      }
    }
  }
  return std::nullopt;
}

void split_rec(const Rep& x, const RepMor& incl, Rng& rng, std::vector<SubRep>& out) {
  if (x.total_dim() == 0) return;
  const EndData end = endomorphisms(x);
  if (end.top_dim() == 1) {
    out.push_back({x, incl});
    return;
  }
  const auto psi = splitting_element(x, end, rng);
  if (!psi)
    throw DecompositionError("could not split a module with " + std::to_string(end.top_dim()) +
                             "-dimensional endomorphism top " + dims_string(x.dims) +
                             "; the residue algebra may be a division algebra over Q, rerun over a prime field");
  auto [k, im] = fitting(x, *psi);
  split_rec(k.rep, compose(incl, k.map), rng, out);
  split_rec(im.rep, compose(incl, im.map), rng, out);
}

}  // namespace

std::vector<SubRep> split_indecomposables(const Rep& x, Rng& rng) {
  std::vector<SubRep> out;
  split_rec(x, identity(x), rng, out);
  return out;
}

bool is_indecomposable(const Rep& x, Rng& rng) {
  if (x.total_dim() == 0) return false;
  const EndData end = endomorphisms(x);
  if (end.top_dim() == 1) return true;
  return !splitting_element(x, end, rng).has_value();
}

// ---------------------------------------------------------------- filtrations

namespace {

bool is_semibrick(const std::vector<Rep>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      const int h = hom_dim(s[i], s[j]);
      if (h != (i == j ? 1 : 0)) return false;
    }
  return true;
}

bool filt_semibrick(const Rep& x, const std::vector<Rep>& s) {
  if (x.total_dim() == 0) return true;
  for (const auto& si : s) {
    if (si.total_dim() > x.total_dim()) continue;
    const auto hs = hom_basis(si, x);
    if (hs.empty()) continue;
    // A nonzero map from a simple object of the wide category must be mono.
    if (!is_mono(hs[0])) return false;
    return filt_semibrick(cokernel(hs[0], si, x).rep, s);
  }
  return false;
}

bool filt_search(const Rep& x, const std::vector<Rep>& s, Rng& rng, int& budget) {
  if (x.total_dim() == 0) return true;
  if (--budget < 0) return false;
  for (const auto& si : s) {
    if (si.total_dim() == 0 || si.total_dim() > x.total_dim()) continue;
    bool fits = true;
    for (std::size_t v = 0; v < x.dims.size(); ++v) fits &= si.dims[v] <= x.dims[v];
    if (!fits) continue;
    const auto hs = hom_basis(si, x);
    std::vector<RepMor> cands = hs;
    std::uniform_int_distribution<long> dist(-5, 5);
    for (int t = 0; t < 3 && hs.size() > 1; ++t) {
      std::vector<Scalar> c;
      for (std::size_t k = 0; k < hs.size(); ++k) c.emplace_back(dist(rng));
      cands.push_back(combine(hs, c, si, x));
    }
    for (const auto& f : cands) {
      if (!is_mono(f)) continue;
      if (filt_search(cokernel(f, si, x).rep, s, rng, budget)) return true;
    }
  }
  return false;
}

}  // namespace

bool filt_member(const Rep& x, const std::vector<Rep>& s, Rng& rng, int budget) {
  if (x.total_dim() == 0) return true;
  if (s.empty()) return false;
  if (is_semibrick(s)) return filt_semibrick(x, s);
  return filt_search(x, s, rng, budget);
}

// ---------------------------------------------------------------- registry

std::optional<std::pair<IndecId, RepMor>> Registry::find(const Rep& x, Rng& rng) const {
  std::shared_lock lock(mu_);
  const auto it = by_dims_.find(x.dims);
  if (it == by_dims_.end()) return std::nullopt;
  for (int id : it->second)
    if (auto f = find_iso(reps_[id], x, rng)) return std::make_pair(IndecId{id}, *f);
  return std::nullopt;
}

std::pair<IndecId, RepMor> Registry::intern(const Rep& x, Rng& rng) {
  if (auto hit = find(x, rng)) return *hit;
  std::unique_lock lock(mu_);
  const int id = static_cast<int>(reps_.size());
  reps_.push_back(x);
  by_dims_[x.dims].push_back(id);
  return {IndecId{id}, identity(x)};
}

const Rep& Registry::rep(IndecId id) const {
  std::shared_lock lock(mu_);
  if (id.value < 0 || id.value >= static_cast<int>(reps_.size())) throw std::out_of_range("unknown indecomposable id");
  return reps_[id.value];
}

std::size_t Registry::size() const {
  std::shared_lock lock(mu_);
  return reps_.size();
}

// ---------------------------------------------------------------- ModuleCategory

ModuleCategory::ModuleCategory(AlgebraPtr a, std::uint64_t seed)
    : algebra_(std::move(a)), seed_(seed), rng_(seed), registry_(algebra_), cache_(std::make_unique<Cache>()) {
  ensure_standard();
}

ModuleCategory::~ModuleCategory() = default;

void ModuleCategory::ensure_standard() {
  const int n = algebra_->rank();
  for (int v = 0; v < n; ++v) proj_.push_back(registry_.intern(projective_rep(algebra_, v), rng_).first);
  for (int v = 0; v < n; ++v) simp_.push_back(registry_.intern(simple_rep(algebra_, v), rng_).first);
  for (int v = 0; v < n; ++v) inj_.push_back(registry_.intern(injective_rep(algebra_, v), rng_).first);
}

IndecId ModuleCategory::intern(const Rep& x) {
  std::lock_guard lock(mu_);
  return registry_.intern(x, rng_).first;
}

std::vector<Summand> ModuleCategory::decompose_certified(const Rep& x) {
  std::lock_guard lock(mu_);
  std::vector<Summand> out;
  for (auto& piece : split_indecomposables(x, rng_)) {
    auto [id, f] = registry_.intern(piece.rep, rng_);
    out.push_back({id, compose(piece.map, f)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) { return a.id < b.id; });
  return out;
}

std::vector<IndecId> ModuleCategory::decompose(const Rep& x) {
  std::vector<IndecId> ids;
  for (const auto& s : decompose_certified(x)) ids.push_back(s.id);
  return ids;
}

Rep ModuleCategory::sum_of(const std::vector<IndecId>& ids) const {
  if (ids.empty()) return zero_rep(algebra_);
  std::vector<Rep> parts;
  for (auto id : ids) parts.push_back(rep(id));
  return direct_sum(parts).rep;
}

IndecId ModuleCategory::projective(int v) { return proj_.at(v); }
IndecId ModuleCategory::injective(int v) { return inj_.at(v); }
IndecId ModuleCategory::simple(int v) { return simp_.at(v); }

std::optional<int> ModuleCategory::projective_vertex(IndecId id) {
  for (std::size_t v = 0; v < proj_.size(); ++v)
    if (proj_[v] == id) return static_cast<int>(v);
  return std::nullopt;
}

std::optional<int> ModuleCategory::injective_vertex(IndecId id) {
  for (std::size_t v = 0; v < inj_.size(); ++v)
    if (inj_[v] == id) return static_cast<int>(v);
  return std::nullopt;
}

std::optional<int> ModuleCategory::simple_vertex(IndecId id) {
  for (std::size_t v = 0; v < simp_.size(); ++v)
    if (simp_[v] == id) return static_cast<int>(v);
  return std::nullopt;
}

std::string ModuleCategory::name(IndecId id) {
  if (auto v = projective_vertex(id)) return "P(" + std::to_string(*v + 1) + ")";
  if (auto v = simple_vertex(id)) return "S(" + std::to_string(*v + 1) + ")";
  const auto& d = rep(id).dims;
  std::string s = "M" + dims_string(d);
  // Disambiguate modules sharing a dimension vector by registration order.
  int rank_among = 0;
  for (int k = 0; k < id.value; ++k)
    if (registry_.rep(IndecId{k}).dims == d) ++rank_among;
  if (rank_among > 0) s += "#" + std::to_string(rank_among);
  return s;
}

int ModuleCategory::hom_dim(IndecId x, IndecId y) {
  std::lock_guard lock(mu_);
  const auto key = std::make_pair(x.value, y.value);
  if (auto it = hom_dims_.find(key); it != hom_dims_.end()) return it->second;
  const int h = tautilt::hom_dim(rep(x), rep(y));
  hom_dims_[key] = h;
  return h;
}

ModuleCategory& ModuleCategory::opposite() {
  std::lock_guard lock(mu_);
  if (!opposite_) opposite_ = std::make_unique<ModuleCategory>(tautilt::opposite(*algebra_), seed_ + 1);
  return *opposite_;
}

}  // namespace tautilt
