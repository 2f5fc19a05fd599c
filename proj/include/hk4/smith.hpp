#pragma once

// Smith normal form of an integer matrix, with the unimodular row and
// column transforms that realize it.

#include <vector>

#include "hk4/matrix.hpp"

namespace hk4 {

struct SmithResult {
  Mat d;  // diagonal, nonnegative, d_1 | d_2 | ... | d_r
  Mat u;  // unimodular, rows x rows
  Mat v;  // unimodular, cols x cols; u * m * v == d
};

// Requires integral entries.  The returned diagonal is nonnegative with each
// invariant factor dividing the next; u and v have determinant +-1.
SmithResult smith_normal_form(const Mat& m);

// The nonzero diagonal entries of the Smith form, in order.
std::vector<Int> invariant_factors(const Mat& m);

}  // namespace hk4
