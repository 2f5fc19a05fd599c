#include "hk4/smith.hpp"

#include <algorithm>

namespace hk4 {

namespace {

struct Work {
  std::vector<std::vector<Int>> a, u, v;
  int rows, cols;

  void swap_rows(int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  void add_row(int dst, int src, const Int& f) {  // row_dst += f * row_src
    for (int j = 0; j < cols; ++j) a[dst][j] += f * a[src][j];
    for (int j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
  }
  void add_col(int dst, int src, const Int& f) {  // col_dst += f * col_src
    for (int i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
    for (int i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
  }
  void negate_row(int i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
};

}  // namespace

SmithResult smith_normal_form(const Mat& m) {
  if (!m.is_integral()) throw PreconditionError("Smith normal form requires integer entries");
  const int rows = m.rows(), cols = m.cols();
  Work w;
  w.rows = rows;
  w.cols = cols;
  w.a.assign(rows, std::vector<Int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) w.a[i][j] = num(m.at(i, j));
  w.u.assign(rows, std::vector<Int>(rows));
  w.v.assign(cols, std::vector<Int>(cols));
  for (int i = 0; i < rows; ++i) w.u[i][i] = 1;
  for (int j = 0; j < cols; ++j) w.v[j][j] = 1;

  using boost::multiprecision::abs;
  const int t_max = std::min(rows, cols);
  for (int t = 0; t < t_max; ++t) {
    // Locate the smallest nonzero entry of the trailing block as pivot.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (w.a[i][j] == 0) continue;
        if (pi < 0 || abs(w.a[i][j]) < abs(w.a[pi][pj])) { pi = i; pj = j; }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) w.swap_rows(pi, t);
    if (pj != t) w.swap_cols(pj, t);

    for (;;) {
      // Reduce column t, re-pivoting on a smaller remainder when one appears.
      bool again = false;
      for (int i = t + 1; i < rows; ++i) {
        if (w.a[i][t] == 0) continue;
        Int q = w.a[i][t] / w.a[t][t];
        w.add_row(i, t, -q);
        if (w.a[i][t] != 0) {
          w.swap_rows(i, t);
          again = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (w.a[t][j] == 0) continue;
        Int q = w.a[t][j] / w.a[t][t];
        w.add_col(j, t, -q);
        if (w.a[t][j] != 0) {
          w.swap_cols(j, t);
          again = true;
        }
      }
      if (again) continue;
      // Pivot now divides its row and column exactly; enforce divisibility of
      // the whole trailing block by folding a bad row into row t.
      int bi = -1, bj = -1;
      for (int i = t + 1; i < rows && bi < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (w.a[i][j] % w.a[t][t] != 0) { bi = i; bj = j; break; }
      if (bi < 0) break;
      w.add_row(t, bi, 1);
      (void)bj;
    }
    if (w.a[t][t] < 0) w.negate_row(t);
  }

  SmithResult out;
  out.d = Mat(rows, cols);
  out.u = Mat(rows, rows);
  out.v = Mat(cols, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.d.at(i, j) = Rational(w.a[i][j]);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) out.u.at(i, j) = Rational(w.u[i][j]);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) out.v.at(i, j) = Rational(w.v[i][j]);
  return out;
}

std::vector<Int> invariant_factors(const Mat& m) {
  SmithResult s = smith_normal_form(m);
  std::vector<Int> f;
  for (int t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    Int d = to_int(s.d.at(t, t));
    if (d != 0) f.push_back(d);
  }
  return f;
}

}  // namespace hk4
