#include "tautilt/exactla.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tautilt {

namespace {
std::atomic<unsigned long> g_prime{0};

// Below this many entries per update sweep the OpenMP overhead dominates.
constexpr std::size_t kParallelThreshold = 4096;
}  // namespace

void Field::use_rationals() { g_prime = 0; }

void Field::use_prime(unsigned long p) {
  if (p < 2) throw FieldError("field characteristic must be a prime >= 2");
  mpz_class z(p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw FieldError("not a prime: " + std::to_string(p));
  g_prime = p;
}

unsigned long Field::characteristic() { return g_prime; }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long v) : v_(v) {
  if (g_prime != 0) reduce();
}

Scalar::Scalar(const mpq_class& q) : v_(q) {
  v_.canonicalize();
  if (g_prime != 0) reduce();
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw FieldError("not a number: " + s);
  if (q.get_den() == 0) throw FieldError("zero denominator: " + s);
  return Scalar(q);
}

void Scalar::reduce() {
  const unsigned long p = g_prime;
  mpz_class mod(p);
  mpz_class num = v_.get_num() % mod;
  if (num < 0) num += mod;
  mpz_class den = v_.get_den() % mod;
  if (den < 0) den += mod;
  if (den == 0) throw FieldError("denominator vanishes modulo " + std::to_string(p));
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    num = (num * inv) % mod;
  }
  v_ = mpq_class(num);
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  Scalar r;
  r.v_ = 1 / v_;
  if (g_prime != 0) r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  v_ += o.v_;
  if (g_prime != 0) reduce();
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  v_ -= o.v_;
  if (g_prime != 0) reduce();
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  v_ *= o.v_;
  if (g_prime != 0) reduce();
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r;
  r.v_ = -v_;
  if (g_prime != 0) r.reduce();
  return r;
}

// ---------------------------------------------------------------- Mat

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Mat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Mat Mat::from_columns(std::span<const Vec> cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  Mat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column mismatch");
  Mat m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Mat::column(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Mat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
  Mat m(idx.size(), c_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix product: shape mismatch");
  Mat m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.c_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vec r(a.r_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
  return r;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- elimination

namespace {

// Integer Bareiss forward elimination on rows scaled to clear denominators.
// Returns the echelon pivots; `z` holds the fraction-free echelon form.
std::vector<std::size_t> bareiss(std::vector<std::vector<mpz_class>>& z, std::size_t cols,
                                 bool parallel) {
  const std::size_t rows = z.size();
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && z[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(z[p], z[r]);
    const mpz_class piv = z[r][c];
    const std::size_t work = (rows - r) * (cols - c);
    const auto update = [&](std::size_t i) {
      auto& row = z[i];
      const mpz_class f = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        row[j] = piv * row[j] - f * z[r][j];
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    };
    if (parallel && work >= kParallelThreshold) {
      const long lo = static_cast<long>(r + 1), hi = static_cast<long>(rows);
#pragma omp parallel for schedule(static)
      for (long i = lo; i < hi; ++i) update(static_cast<std::size_t>(i));
    } else {
      for (std::size_t i = r + 1; i < rows; ++i) update(i);
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Echelon rref_rational(Mat m, bool parallel) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).value().get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m(i, j).value();
      z[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  auto pivots = bareiss(z, cols, parallel);
  Mat out(rows, cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class& piv = z[i][pivots[i]];
    for (std::size_t j = pivots[i]; j < cols; ++j)
      if (z[i][j] != 0) out(i, j) = Scalar(mpq_class(z[i][j], piv));
  }
  // Back substitution: clear entries above each pivot.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    const auto clear = [&](std::size_t i) {
      const Scalar f = out(i, pc);
      if (f.is_zero()) return;
      for (std::size_t j = pc; j < cols; ++j)
        if (!out(k, j).is_zero()) out(i, j) -= f * out(k, j);
    };
    if (parallel && k * (cols - pc) >= kParallelThreshold) {
      const long hi = static_cast<long>(k);
#pragma omp parallel for schedule(static)
      for (long i = 0; i < hi; ++i) clear(static_cast<std::size_t>(i));
    } else {
      for (std::size_t i = 0; i < k; ++i) clear(i);
    }
  }
  return {std::move(out), std::move(pivots)};
}

Echelon rref_prime(Mat m, bool parallel) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    const auto clear = [&](std::size_t i) {
      if (i == r) return;
      const Scalar f = m(i, c);
      if (f.is_zero()) return;
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    };
    if (parallel && rows * (cols - c) >= kParallelThreshold) {
      const long hi = static_cast<long>(rows);
#pragma omp parallel for schedule(static)
      for (long i = 0; i < hi; ++i) clear(static_cast<std::size_t>(i));
    } else {
      for (std::size_t i = 0; i < rows; ++i) clear(i);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

const Scalar* find_entry(const SparseRow& row, std::size_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const std::pair<std::size_t, Scalar>& e, std::size_t col) { return e.first < col; });
  return it != row.end() && it->first == c ? &it->second : nullptr;
}

// row - f * piv, both sorted by column.
SparseRow axpy(const SparseRow& row, const Scalar& f, const SparseRow& piv) {
  SparseRow out;
  out.reserve(row.size() + piv.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < piv.size()) {
    if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || piv[j].first < row[i].first) {
      out.emplace_back(piv[j].first, -(f * piv[j].second));
      ++j;
    } else {
      Scalar v = row[i].second - f * piv[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

Echelon rref_sparse(const Mat& m, bool parallel) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<SparseRow> a(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!m(i, j).is_zero()) a[i].emplace_back(j, m(i, j));
  std::vector<char> used(rows, 0);
  std::vector<std::size_t> pivot_rows, pivots;
  for (std::size_t c = 0; c < cols && pivot_rows.size() < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = 0; i < rows; ++i)
      if (!used[i] && !a[i].empty() && a[i].front().first == c && (best == rows || a[i].size() < a[best].size()))
        best = i;
    if (best == rows) continue;
    used[best] = 1;
    const Scalar inv = a[best].front().second.inverse();
    for (auto& e : a[best]) e.second *= inv;
    const SparseRow& piv = a[best];
    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < rows; ++i)
      if (i != best && find_entry(a[i], c)) hit.push_back(i);
    std::size_t work = 0;
    for (auto i : hit) work += a[i].size() + piv.size();
    const auto clear = [&](std::size_t i) {
      const Scalar f = *find_entry(a[i], c);
      a[i] = axpy(a[i], f, piv);
    };
    if (parallel && work >= kParallelThreshold) {
      const long n = static_cast<long>(hit.size());
#pragma omp parallel for schedule(dynamic, 4)
      for (long k = 0; k < n; ++k) clear(hit[static_cast<std::size_t>(k)]);
    } else {
      for (auto i : hit) clear(i);
    }
    pivot_rows.push_back(best);
    pivots.push_back(c);
  }
  Mat out(rows, cols);
  for (std::size_t k = 0; k < pivot_rows.size(); ++k)
    for (const auto& [j, v] : a[pivot_rows[k]]) out(k, j) = v;
  return {std::move(out), std::move(pivots)};
}

}  // namespace

Echelon rref(const Mat& m) { return rref_sparse(m, true); }

Echelon rref_serial(const Mat& m) { return rref_sparse(m, false); }

Echelon rref_dense(Mat m) {
  return Field::characteristic() == 0 ? rref_rational(std::move(m), false) : rref_prime(std::move(m), false);
}

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m).pivots.size();
}

std::vector<Vec> kernel_basis(const Mat& m) {
  const std::size_t n = m.cols();
  std::vector<Vec> out;
  if (n == 0) return out;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(n);
      v[j] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  const Echelon e = rref(m);
  std::vector<char> is_pivot(n, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  const Echelon e = rref(aug);
  Vec x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

Mat image_sum(std::span<const Mat> ms) {
  if (ms.empty()) return Mat();
  Mat all = ms[0];
  for (std::size_t k = 1; k < ms.size(); ++k) all = Mat::hcat(all, ms[k]);
  return Subspace::span(all).basis();
}

Mat image_intersection(std::span<const Mat> ms) {
  if (ms.empty()) return Mat();
  Subspace s = Subspace::span(ms[0]);
  for (std::size_t k = 1; k < ms.size(); ++k) s = s.intersect(Subspace::span(ms[k]));
  return s.basis();
}

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Echelon e = rref(Mat::hcat(m, Mat::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n))
    throw std::domain_error("matrix is singular");
  return e.reduced.block(0, n, n, n);
}

Scalar determinant(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      const Scalar f = a(i, c) * inv;
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Mat power(const Mat& m, unsigned e) {
  Mat result = Mat::identity(m.rows());
  Mat base = m;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(const Mat& gens) {
  Subspace s(gens.rows());
  if (gens.cols() == 0 || gens.rows() == 0) return s;
  const Echelon e = rref(gens.transpose());
  const std::size_t d = e.pivots.size();
  s.basis_ = e.reduced.block(0, 0, d, gens.rows()).transpose();
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::full(std::size_t n) { return span(Mat::identity(n)); }

bool Subspace::contains(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("subspace membership: dimension mismatch");
  const Vec c = coords(v);
  return basis_ * c == v;
}

Vec Subspace::coords(const Vec& v) const {
  Vec c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

std::vector<std::size_t> Subspace::free_rows() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

Mat Subspace::quotient_map() const {
  const auto fr = free_rows();
  // x |-> (x - B x[pivots])[free rows]
  Mat q(fr.size(), n_);
  for (std::size_t r = 0; r < fr.size(); ++r) {
    q(r, fr[r]) = 1;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const Scalar& b = basis_(fr[r], k);
      if (!b.is_zero()) q(r, pivots_[k]) -= b;
    }
  }
  return q;
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (n_ != o.n_) throw std::invalid_argument("subspace sum: dimension mismatch");
  if (dim() == 0) return o;
  if (o.dim() == 0) return *this;
  return span(Mat::hcat(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (n_ != o.n_) throw std::invalid_argument("subspace intersection: dimension mismatch");
  if (dim() == 0 || o.dim() == 0) return Subspace(n_);
  Mat neg = o.basis_;
  neg *= Scalar(-1);
  const auto ker = kernel_basis(Mat::hcat(basis_, neg));
  std::vector<Vec> vs;
  for (const auto& k : ker) vs.push_back(basis_ * Vec(k.begin(), k.begin() + static_cast<long>(dim())));
  return span(Mat::from_columns(vs, n_));
}

// ---------------------------------------------------------------- polynomials

Vec krylov_annihilator(const Mat& m, const Vec& v) {
  const std::size_t n = m.rows();
  std::vector<Vec> ks{v};
  while (true) {
    const Mat k = Mat::from_columns(ks, n);
    const Vec next = m * ks.back();
    if (auto sol = solve(k, next)) {
      Vec p(ks.size() + 1);
      for (std::size_t i = 0; i < ks.size(); ++i) p[i] = -(*sol)[i];
      p[ks.size()] = 1;
      return p;
    }
    ks.push_back(next);
  }
}

namespace {
std::vector<mpz_class> divisors(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> primes;
  std::vector<int> mult;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (d > 1000000) return {};
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) {
      primes.push_back(d);
      mult.push_back(e);
    }
  }
  if (n > 1) {
    primes.push_back(n);
    mult.push_back(1);
  }
  std::vector<mpz_class> out{1};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t cur = out.size();
    mpz_class pw = 1;
    for (int e = 1; e <= mult[i]; ++e) {
      pw *= primes[i];
      for (std::size_t k = 0; k < cur; ++k) out.push_back(out[k] * pw);
    }
  }
  return out;
}

Scalar eval(const Vec& c, const Scalar& x) {
  Scalar r;
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}
}  // namespace

std::vector<Scalar> rational_roots(const Vec& coeffs) {
  std::vector<Scalar> roots;
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1].is_zero()) --deg;
  if (deg <= 1) return roots;
  Vec c(coeffs.begin(), coeffs.begin() + static_cast<long>(deg));
  const auto add = [&](const Scalar& r) {
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  };
  std::size_t low = 0;
  while (c[low].is_zero()) ++low;
  if (low > 0) add(Scalar(0));
  if (Field::characteristic() != 0) {
    const unsigned long p = Field::characteristic();
    if (p > 65521) throw FieldError("root search over F_p limited to p <= 65521");
    for (unsigned long x = 1; x < p; ++x)
      if (eval(c, Scalar(static_cast<long>(x))).is_zero()) add(Scalar(static_cast<long>(x)));
    return roots;
  }
  // Integer coefficients for c[low..deg).
  mpz_class l = 1;
  for (std::size_t i = low; i < deg; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c[i].value().get_den_mpz_t());
  std::vector<mpz_class> z;
  for (std::size_t i = low; i < deg; ++i) z.push_back(c[i].value().get_num() * (l / c[i].value().get_den()));
  const auto ps = divisors(z.front());
  const auto qs = divisors(z.back());
  if (ps.empty() || qs.empty()) {
    for (long q = 1; q <= 12; ++q)
      for (long pn = -60; pn <= 60; ++pn) {
        const Scalar x(mpq_class(pn, q));
        if (!x.is_zero() && eval(c, x).is_zero()) add(x);
      }
    return roots;
  }
  for (const auto& q : qs)
    for (const auto& pn : ps)
      for (int sgn : {1, -1}) {
        const Scalar x(mpq_class(pn * sgn, q));
        if (eval(c, x).is_zero()) add(x);
      }
  return roots;
}

}  // namespace tautilt
