#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "tautilt/exactla.hpp"

using namespace tautilt;

namespace {

Mat random_mat(std::mt19937_64& rng, int r, int c, int density_pct, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> pct(0, 99), val(lo, hi);
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (pct(rng) < density_pct) m(i, j) = val(rng);
  return m;
}

// cofactor expansion, fine up to 6x6
Scalar laplace(const Mat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Scalar d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Mat minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Scalar term = m(0, j) * laplace(minor);
    d = j % 2 ? d - term : d + term;
  }
  return d;
}

bool is_rref(const Echelon& e) {
  const Mat& r = e.reduced;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (!r(i, e.pivots[i]).is_one()) return false;
    for (std::size_t k = 0; k < r.rows(); ++k)
      if (k != i && !r(k, e.pivots[i]).is_zero()) return false;
    for (std::size_t c = 0; c < e.pivots[i]; ++c)
      if (!r(i, c).is_zero()) return false;
    if (i && e.pivots[i] <= e.pivots[i - 1]) return false;
  }
  for (std::size_t i = e.pivots.size(); i < r.rows(); ++i)
    for (std::size_t c = 0; c < r.cols(); ++c)
      if (!r(i, c).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  const Scalar third = Scalar(1) / Scalar(3);
  CHECK(third * Scalar(3) == Scalar(1));
  CHECK(Scalar::parse("-4/6") == Scalar(-2) / Scalar(3));
  CHECK(Scalar::parse("5").str() == "5");
  CHECK((third + third + third).is_one());
  CHECK(Scalar(7).inverse() * Scalar(7) == Scalar(1));
}

TEST_CASE("three eliminations agree") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const int r = 1 + t % 9, c = 1 + (t * 7) % 11;
    const Mat m = random_mat(rng, r, c, 20 + t % 70);
    const Echelon a = rref(m), b = rref_serial(m), d = rref_dense(m);
    CHECK(is_rref(a));
    CHECK(a.reduced == b.reduced);
    CHECK(a.reduced == d.reduced);
    CHECK(a.pivots == d.pivots);
  }
}

TEST_CASE("parallel elimination on a large sparse matrix matches serial") {
  std::mt19937_64 rng(5);
  const Mat m = random_mat(rng, 120, 140, 6);
  CHECK(rref(m).reduced == rref_serial(m).reduced);
}

TEST_CASE("rank-nullity and kernel vectors") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    const Mat m = random_mat(rng, 2 + t % 6, 3 + t % 7, 50);
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == m.cols());
    for (const auto& v : ker) {
      const Vec z = m * v;
      for (const auto& s : z) CHECK(s.is_zero());
    }
  }
}

TEST_CASE("solve finds a preimage exactly when one exists") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const Mat m = random_mat(rng, 4, 3, 60);
    const Mat x = random_mat(rng, 3, 1, 100);
    const Vec b = m * x.column(0);
    const auto sol = solve(m, b);
    REQUIRE(sol);
    CHECK(m * *sol == b);
  }
  const Mat z = Mat::from_rows({{1, 0}, {0, 0}});
  CHECK_FALSE(solve(z, Vec{0, 1}));
}

TEST_CASE("determinant and inverse") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 5;
    const Mat m = random_mat(rng, n, n, 70);
    CHECK(determinant(m) == laplace(m));
    CHECK(is_invertible(m) == !laplace(m).is_zero());
    if (is_invertible(m)) CHECK(inverse(m) * m == Mat::identity(n));
  }
}

TEST_CASE("subspaces: sum and intersection dimensions") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const Mat a = random_mat(rng, 6, 3, 50), b = random_mat(rng, 6, 3, 50);
    const Subspace u = Subspace::span(a), w = Subspace::span(b);
    CHECK((u + w).dim() + u.intersect(w).dim() == u.dim() + w.dim());
    CHECK(u.dim() == rank(a));
    for (std::size_t j = 0; j < a.cols(); ++j) CHECK(u.contains(a.column(j)));
    CHECK(Subspace::span(Mat::hcat(a, a)) == u);
  }
}

TEST_CASE("rational roots and Krylov annihilator") {
  // (x - 1/2)(x + 3) = x^2 + 5/2 x - 3/2
  const auto roots = rational_roots({Scalar::parse("-3/2"), Scalar::parse("5/2"), 1});
  REQUIRE(roots.size() == 2);
  CHECK(std::count(roots.begin(), roots.end(), Scalar::parse("1/2")) == 1);
  CHECK(std::count(roots.begin(), roots.end(), Scalar(-3)) == 1);
  const Mat j = Mat::from_rows({{2, 1}, {0, 2}});
  const Vec p = krylov_annihilator(j, {0, 1});
  // (x - 2)^2
  REQUIRE(p.size() == 3);
  CHECK(p[0] / p[2] == Scalar(4));
  CHECK(p[1] / p[2] == Scalar(-4));
}
