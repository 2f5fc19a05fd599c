#pragma once

// Dense exact-rational matrices and the linear algebra used throughout:
// fraction-free determinants, exact inverses, reduced row echelon form,
// kernel bases, and the inertia (signature) of a symmetric form obtained
// by congruence diagonalization.

#include <initializer_list>
#include <vector>

#include "hk4/rational.hpp"

namespace hk4 {

using Vec = std::vector<Rational>;

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n);
  static Mat from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_cols(const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_integral() const;
  bool is_zero() const;

  Mat transpose() const;
  Vec row(int i) const;
  Vec col(int j) const;

  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat scaled(const Rational& c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool operator==(const Mat& rhs) const = default;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// --- vector helpers ---------------------------------------------------------

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Rational& c);
bool vec_is_zero(const Vec& a);
Vec vec_from_ints(std::initializer_list<long long> entries);

// --- exact linear algebra ---------------------------------------------------

// Exact determinant.  Rows are cleared of denominators, then the integer
// matrix is reduced with the Bareiss fraction-free recurrence (all interior
// divisions are exact), and the scale is divided back out.
Rational det(const Mat& m);

// Exact inverse via Gauss-Jordan elimination; throws PreconditionError on a
// singular input.
Mat inverse(const Mat& m);

int rank(const Mat& m);

struct Rref {
  Mat mat;                  // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
};
Rref rref(const Mat& m);

// Basis of the right kernel {v : m v = 0}, one vector per free column, in
// ascending free-column order (deterministic).
std::vector<Vec> kernel_basis(const Mat& m);

// Solve m x = b; returns one solution, throws PreconditionError if none.
Vec solve(const Mat& m, const Vec& b);

struct Inertia {
  int pos = 0, neg = 0, zero = 0;
  bool operator==(const Inertia&) const = default;
};

// Sylvester inertia of a symmetric matrix by congruence diagonalization.
// A zero diagonal in the remaining block with a nonzero off-diagonal entry
// a_ij is handled by adding row/column j to row/column i, which splits the
// hyperbolic pair into one positive and one negative square.
Inertia inertia(const Mat& sym);

}  // namespace hk4
