// Exact linear algebra over Q (GMP rationals) or a prime field F_p.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tautilt {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Process-wide ground field. Rationals unless a prime is selected.
/// Select the field before creating any Scalar; mixing is undefined.
class Field {
 public:
  static void use_rationals();
  static void use_prime(unsigned long p);
  /// 0 for Q.
  static unsigned long characteristic();
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& q);
  static Scalar parse(std::string_view text);

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }
  std::string str() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  void reduce();
  mpq_class v_;
};

using Vec = std::vector<Scalar>;

/// Dense row-major matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static Mat identity(std::size_t n);
  static Mat from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static Mat from_columns(std::span<const Vec> cols, std::size_t rows);
  static Mat hcat(const Mat& a, const Mat& b);
  static Mat vcat(const Mat& a, const Mat& b);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const;
  bool is_square() const { return r_ == c_; }
  Mat transpose() const;
  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat select_rows(std::span<const std::size_t> idx) const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b) = default;

  std::string str() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

struct Echelon {
  Mat reduced;                       // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Sparse Gauss-Jordan elimination; the pivot row for each column is the
/// sparsest candidate. Row updates run under OpenMP above a size threshold.
Echelon rref(const Mat& m);
/// Single-threaded reference for rref().
Echelon rref_serial(const Mat& m);
/// Dense elimination (Bareiss over Z in characteristic 0), kept as an
/// independent check on the sparse kernel.
Echelon rref_dense(Mat m);

std::size_t rank(const Mat& m);
/// Basis of the right null space {x : m x = 0}.
std::vector<Vec> kernel_basis(const Mat& m);
/// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);
/// Basis (as columns) of the sum of the column spaces.
Mat image_sum(std::span<const Mat> ms);
/// Basis (as columns) of the intersection of the column spaces.
Mat image_intersection(std::span<const Mat> ms);
bool is_invertible(const Mat& m);
Mat inverse(const Mat& m);
Scalar determinant(const Mat& m);
Mat power(const Mat& m, unsigned e);

/// Subspace of K^n with a canonical basis: the columns, transposed, are in
/// reduced row echelon form. Coordinates of a member are read off the pivot rows.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient), basis_(ambient, 0) {}
  /// Span of the columns of `gens` (rows must equal ambient).
  static Subspace span(const Mat& gens);
  static Subspace full(std::size_t n);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return pivots_.size(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }
  bool contains(const Vec& v) const;
  /// Coordinates of v in basis(); v must lie in the subspace.
  Vec coords(const Vec& v) const;
  /// Rows not among the pivots; they index a complement.
  std::vector<std::size_t> free_rows() const;
  /// Linear map K^n -> K^n/U in the coordinates given by free_rows().
  Mat quotient_map() const;
  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  std::size_t n_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Rational roots of a polynomial given by coefficients c0 + c1 x + ...
/// Uses the rational root test; gives up (returns what it found) when the
/// constant or leading coefficient is too large to factor by trial division.
std::vector<Scalar> rational_roots(const Vec& coeffs);
/// Polynomial p with p(m) v = 0 of least degree for the given vector.
Vec krylov_annihilator(const Mat& m, const Vec& v);

}  // namespace tautilt
