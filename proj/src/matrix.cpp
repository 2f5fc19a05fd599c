#include "hk4/matrix.hpp"

#include <algorithm>

namespace hk4 {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  int r = int(rows.size());
  int c = r ? int(rows.begin()->size()) : 0;
  Mat m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (int(row.size()) != c) throw PreconditionError("ragged row in matrix literal");
    int j = 0;
    for (long long x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw PreconditionError("ragged row in matrix");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
  int c = int(cols.size());
  int r = c ? int(cols[0].size()) : 0;
  Mat m(r, c);
  for (int j = 0; j < c; ++j) {
    if (int(cols[j].size()) != r) throw PreconditionError("ragged column in matrix");
    for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

bool Mat::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool Mat::is_integral() const {
  for (const auto& x : a_)
    if (!is_integer(x)) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Mat::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("matrix product shape mismatch");
  Mat out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j) == 0) continue;
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix sum shape mismatch");
  Mat out(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + rhs.a_[k];
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix difference shape mismatch");
  Mat out(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - rhs.a_[k];
  return out;
}

Mat Mat::scaled(const Rational& c) const {
  Mat out(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
  return out;
}

Vec Mat::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw PreconditionError("matrix-vector shape mismatch");
  Vec out(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw PreconditionError("vector sum shape mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw PreconditionError("vector difference shape mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scaled(const Vec& a, const Rational& c) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

Vec vec_from_ints(std::initializer_list<long long> entries) {
  Vec v;
  v.reserve(entries.size());
  for (long long x : entries) v.emplace_back(x);
  return v;
}

Rational det(const Mat& m) {
  if (!m.is_square()) throw PreconditionError("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row so the Bareiss recurrence runs on integers.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Rational scale = 1;
  for (int i = 0; i < n; ++i) {
    Int l = 1;
    for (int j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, den(m.at(i, j)));
    scale *= Rational(l);
    for (int j = 0; j < n; ++j) a[i][j] = num(m.at(i, j)) * (l / den(m.at(i, j)));
  }

  // Bareiss: a[i][j] <- (a[i][j]*pivot - a[i][k]*a[k][j]) / prev, exact division.
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rational(sign * a[n - 1][n - 1]) / scale;
}

namespace {

// Gauss-Jordan elimination of [m | rhs]; returns reduced m and pivot columns.
struct Elim {
  Mat m;
  Mat rhs;
  std::vector<int> pivots;
};

Elim eliminate(Mat m, Mat rhs) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      for (int j = 0; j < rhs.cols(); ++j) std::swap(rhs.at(p, j), rhs.at(r, j));
    }
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = 0; j < cols; ++j) m.at(r, j) *= inv;
    for (int j = 0; j < rhs.cols(); ++j) rhs.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (int j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
      for (int j = 0; j < rhs.cols(); ++j) rhs.at(i, j) -= f * rhs.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(rhs), std::move(pivots)};
}

}  // namespace

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw PreconditionError("inverse of non-square matrix");
  Elim e = eliminate(m, Mat::identity(m.rows()));
  if (int(e.pivots.size()) != m.rows()) throw PreconditionError("inverse of singular matrix");
  return e.rhs;
}

int rank(const Mat& m) { return int(eliminate(m, Mat(m.rows(), 0)).pivots.size()); }

Rref rref(const Mat& m) {
  Elim e = eliminate(m, Mat(m.rows(), 0));
  return {std::move(e.m), std::move(e.pivots)};
}

std::vector<Vec> kernel_basis(const Mat& m) {
  Rref r = rref(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(int(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec solve(const Mat& m, const Vec& b) {
  Mat rhs(m.rows(), 1);
  for (int i = 0; i < m.rows(); ++i) rhs.at(i, 0) = b[i];
  Elim e = eliminate(m, std::move(rhs));
  // Inconsistent if a zero row of the reduced matrix has nonzero rhs.
  for (int i = int(e.pivots.size()); i < m.rows(); ++i)
    if (e.rhs.at(i, 0) != 0) throw PreconditionError("linear system has no solution");
  Vec x(m.cols(), Rational(0));
  for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rhs.at(int(i), 0);
  return x;
}

Inertia inertia(const Mat& sym) {
  if (!sym.is_symmetric()) throw PreconditionError("inertia requires a symmetric matrix");
  Mat a = sym;
  const int n = a.rows();
  Inertia out;
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k) == 0) {
      // Prefer a nonzero diagonal entry to swap in.
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, i) != 0) { p = i; break; }
      if (p >= 0) {
        for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
        for (int i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, p));
      } else {
        // All remaining diagonal entries vanish; look for an off-diagonal one.
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (a.at(i, j) != 0) { pi = i; pj = j; break; }
        if (pi < 0) {
          out.zero += n - k;  // remaining block is identically zero
          break;
        }
        // Row/column addition makes a(pi,pi) = 2 a(pi,pj) != 0, then swap up.
        for (int j = 0; j < n; ++j) a.at(pi, j) += a.at(pj, j);
        for (int i = 0; i < n; ++i) a.at(i, pi) += a.at(i, pj);
        if (pi != k) {
          for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pi, j));
          for (int i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, pi));
        }
      }
    }
    const Rational p = a.at(k, k);
    if (p > 0) ++out.pos;
    else if (p < 0) ++out.neg;
    else { ++out.zero; continue; }
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rational f = a.at(i, k) / p;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      for (int j = k; j < n; ++j) a.at(j, i) = a.at(i, j);  // keep symmetry
    }
  }
  return out;
}

}  // namespace hk4
