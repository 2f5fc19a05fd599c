#include "doctest.h"

#include "hk4/matrix.hpp"
#include "hk4/numtheory.hpp"
#include "hk4/rng.hpp"
#include "hk4/smith.hpp"

using namespace hk4;

namespace {

// Independent determinant oracle: recursive cofactor expansion along the
// first row.  Exponential, so only used on small matrices.
Rational det_cofactor(const Mat& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Rational sum = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    Mat minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0, c = 0; k < n; ++k) {
        if (k == j) continue;
        minor.at(i - 1, c++) = m.at(i, k);
      }
    Rational term = m.at(0, j) * det_cofactor(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

Mat random_mat(Rng& rng, int n, bool rational_entries) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = rational_entries ? rng.rational(9, 5) : Rational(rng.range(-9, 9));
  return m;
}

// Random unimodular integer matrix: product of elementary row additions and
// swaps applied to the identity.
Mat random_unimodular(Rng& rng, int n) {
  Mat m = Mat::identity(n);
  for (int step = 0; step < 4 * n; ++step) {
    int i = int(rng.range(0, n - 1)), j = int(rng.range(0, n - 1));
    if (i == j) continue;
    Rational f = Rational(rng.range(-2, 2));
    for (int c = 0; c < n; ++c) m.at(i, c) += f * m.at(j, c);
  }
  return m;
}

}  // namespace

TEST_CASE("determinant matches cofactor oracle and frozen values") {
  CHECK(det(Mat::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det(Mat::from_rows({{12, 20}, {20, 92}})) == 704);
  CHECK(det(Mat::from_rows({{2}})) == 2);
  CHECK(det(Mat(0, 0)) == 1);
  CHECK(det(Mat::from_rows({{1, 2}, {2, 4}})) == 0);

  Rng rng(20260825);
  for (int trial = 0; trial < 40; ++trial) {
    int n = int(rng.range(1, 5));
    Mat m = random_mat(rng, n, trial % 2 == 0);
    CHECK(det(m) == det_cofactor(m));
  }
}

TEST_CASE("determinant is multiplicative and transpose-invariant") {
  Rng rng(7);
  for (int trial = 0; trial < 15; ++trial) {
    int n = int(rng.range(1, 4));
    Mat a = random_mat(rng, n, true), b = random_mat(rng, n, false);
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(det(a.transpose()) == det(a));
  }
}

TEST_CASE("inverse: exact two-sided inverse, hyperbolic plane is self-inverse") {
  Mat u = Mat::from_rows({{0, 1}, {1, 0}});
  CHECK(inverse(u) == u);

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = int(rng.range(1, 5));
    Mat m = random_mat(rng, n, true);
    if (det(m) == 0) continue;
    Mat mi = inverse(m);
    CHECK(m * mi == Mat::identity(n));
    CHECK(mi * m == Mat::identity(n));
  }
  CHECK_THROWS_AS(inverse(Mat::from_rows({{1, 2}, {2, 4}})), PreconditionError);
}

TEST_CASE("inertia: frozen signatures and congruence invariance") {
  CHECK(inertia(Mat::from_rows({{2, 0, 0}, {0, -3, 0}, {0, 0, 0}})) == Inertia{1, 1, 1});
  CHECK(inertia(Mat::from_rows({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
  CHECK(inertia(Mat::from_rows({{0, 3}, {3, 0}})) == Inertia{1, 1, 0});
  CHECK(inertia(Mat(3, 3)) == Inertia{0, 0, 3});

  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    int n = int(rng.range(1, 6));
    Mat m = random_mat(rng, n, false);
    Mat sym = m + m.transpose();
    Inertia in = inertia(sym);
    CHECK(in.pos + in.neg + in.zero == n);
    // Congruence invariance under a random unimodular change of basis.
    Mat s = random_unimodular(rng, n);
    CHECK(inertia(s.transpose() * sym * s) == in);
    // Rank consistency: nonzero squares match the matrix rank.
    CHECK(in.pos + in.neg == rank(sym));
  }
}

TEST_CASE("smith normal form: transforms, divisibility, frozen forms") {
  SUBCASE("hyperbolic plane has trivial invariant factors") {
    auto f = invariant_factors(Mat::from_rows({{0, 1}, {1, 0}}));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 1);
    CHECK(f[1] == 1);
  }
  SUBCASE("transform identities on random integer matrices") {
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
      int r = int(rng.range(1, 5)), c = int(rng.range(1, 5));
      Mat m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Rational(rng.range(-12, 12));
      SmithResult s = smith_normal_form(m);
      CHECK(s.u * m * s.v == s.d);
      Rational du = det(s.u), dv = det(s.v);
      CHECK((du == 1 || du == -1));
      CHECK((dv == 1 || dv == -1));
      Int prev = 0;
      for (int t = 0; t < std::min(r, c); ++t) {
        Int dt = to_int(s.d.at(t, t));
        CHECK(dt >= 0);
        if (prev != 0) CHECK((dt == 0 || dt % prev == 0));
        prev = dt;
      }
      // Off-diagonal must vanish.
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
          if (i != j) CHECK(s.d.at(i, j) == 0);
    }
  }
  SUBCASE("rejects non-integer input") {
    Mat m(1, 1);
    m.at(0, 0) = rat(1, 2);
    CHECK_THROWS_AS(smith_normal_form(m), PreconditionError);
  }
}

TEST_CASE("kernel basis: annihilation, dimension, frozen example") {
  Mat m = Mat::from_rows({{1, 2, 3}});
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(vec_is_zero(m.apply(v)));

  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    int r = int(rng.range(1, 4)), c = int(rng.range(1, 6));
    Mat a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a.at(i, j) = rng.rational(6, 3);
    auto basis = kernel_basis(a);
    CHECK(int(basis.size()) == c - rank(a));
    for (const auto& v : basis) CHECK(vec_is_zero(a.apply(v)));
    // Basis vectors are linearly independent: stack as rows, rank = count.
    if (!basis.empty()) CHECK(rank(Mat::from_rows(basis)) == int(basis.size()));
  }
}

TEST_CASE("solve: consistent and inconsistent systems") {
  Mat a = Mat::from_rows({{1, 2}, {3, 4}});
  Vec x = solve(a, vec_from_ints({5, 11}));
  CHECK(a.apply(x) == vec_from_ints({5, 11}));
  Mat b = Mat::from_rows({{1, 1}, {2, 2}});
  CHECK_THROWS_AS(solve(b, vec_from_ints({1, 3})), PreconditionError);
}

TEST_CASE("square classes in Q*/(Q*)^2") {
  CHECK(squarefree_part(Int(3) << 44) == 3);
  CHECK(squarefree_part(Int(1) << 24) == 1);
  CHECK(squarefree_part(Int(704)) == 11);
  CHECK(squarefree_part(Int(-8)) == -2);
  CHECK(squarefree_part(Int(0)) == 0);
  CHECK(square_class(rat(-8)) == -2);
  CHECK(square_class(rat(1, 2)) == 2);

  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Rational x = rng.rational(300, 300);
    Rational y = rng.rational(40, 40);
    if (x == 0 || y == 0) continue;
    CHECK(square_class(x * y * y) == square_class(x));
  }
  CHECK_THROWS_AS(square_class(Rational(0)), PreconditionError);
}

TEST_CASE("perfect square detection") {
  CHECK(is_perfect_square(Int(0)));
  CHECK(is_perfect_square(Int(1) << 44));
  CHECK(!is_perfect_square(Int(3) << 44));
  CHECK(!is_perfect_square(Int(-4)));
}
