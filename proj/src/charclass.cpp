#include "hk4/charclass.hpp"

#include <algorithm>

#include "hk4/matrix.hpp"
#include "hk4/numtheory.hpp"

namespace hk4 {

namespace {

// Exact square root of a nonnegative rational; throws if it is not a square.
Rational rational_sqrt(const Rational& r) {
  if (r < 0) throw PreconditionError("rational_sqrt: negative input");
  Int n = num(r), d = den(r);
  if (!is_perfect_square(n) || !is_perfect_square(d))
    throw PreconditionError("rational_sqrt: input is not a rational square");
  return Rational(isqrt(n), isqrt(d));
}

}  // namespace

RRProfile solve_c2(const Sym2Space& s, const Vec& h) {
  RRProfile p;
  p.chi_structure = 3;
  p.c4 = 324;
  // Degree-2 Riemann-Roch specialization: 240 chi(O) = <c2,c2> - c4/3.
  p.c2_square = Rational(240) * p.chi_structure + Rational(p.c4, 3);

  const Vec qd = q_dual(s);
  const Rational qq = sym2_pair(s, qd, qd);
  if (qq == 0) throw PreconditionError("solve_c2: degenerate dual class");
  // c2 = a q_dual, so <c2,c2> = a^2 <q_dual,q_dual>.
  const Rational a_abs = rational_sqrt(p.c2_square / qq);

  const Vec h2 = sym2_product(s, h, h);
  const Rational qh2 = sym2_pair(s, qd, h2);
  if (qh2 == 0)
    throw PreconditionError("solve_c2: polarization degenerate against dual class");
  // Pseudoeffectivity of c2 forces <c2, h^2> >= 0, which fixes the sign.
  p.c2_coefficient = qh2 > 0 ? a_abs : -a_abs;
  p.c2_dot_h2 = p.c2_coefficient * qh2;

  p.consistency_240 =
      is_integer(p.c2_square) && p.c4 % 3 == 0 &&
      Rational(240) * p.chi_structure == p.c2_square - Rational(p.c4, 3) &&
      p.c2_dot_h2 >= 0;
  return p;
}

ChiPolynomial chi_of_nh(const Sym2Space& s, const Vec& h) {
  const Vec h2 = sym2_product(s, h, h);
  const Rational h4 = sym2_pair(s, h2, h2);  // quadruple self-intersection
  const RRProfile p = solve_c2(s, h);
  ChiPolynomial chi;
  chi.n4_coeff = h4 / 24;
  chi.n2_coeff = p.c2_dot_h2 / 24;
  chi.n0_coeff = p.chi_structure;
  return chi;
}

FixedSurfaceInvariants fixed_surface(const Sym2Space& s, const Vec& h) {
  FixedSurfaceInvariants f;
  const RRProfile p = solve_c2(s, h);

  // Degree-4 invariant part: span of h^2 inside Sym^2(h-perp) plus the
  // complement line, i.e. 1 + dim Sym^2 of the rank-(n-1) orthogonal space.
  Mat row(1, s.n);
  for (int j = 0; j < s.n; ++j) {
    Rational v = 0;
    for (int i = 0; i < s.n; ++i) v += Rational(h[i]) * s.gram_base.at(i, j);
    row.at(0, j) = v;
  }
  const int k = static_cast<int>(kernel_basis(row).size());
  f.b4_quotient = 1 + k * (k + 1) / 2;
  f.chi_quotient = 4 + f.b4_quotient;  // b0 = b2 = b6 = b8 = 1, odd Betti numbers 0
  f.chi_total = static_cast<int>(p.c4);

  // Route one: additivity over the double cover branched in F.
  f.chi_f_euler = Rational(2 * f.chi_quotient - f.chi_total);

  // Route two: self-intersection of the fixed-surface class
  // cl(F) = 5 h^2 - c2/3.
  const Vec h2 = sym2_product(s, h, h);
  const Vec qd = q_dual(s);
  Vec c2 = vec_scaled(qd, p.c2_coefficient);
  f.cl_f = vec_sub(vec_scaled(h2, Rational(5)), vec_scaled(c2, Rational(1, 3)));
  f.chi_f_square = sym2_pair(s, f.cl_f, f.cl_f);

  const Vec fifteen = vec_sub(vec_scaled(h2, Rational(15)), c2);
  f.fifteen_square = sym2_pair(s, fifteen, fifteen);
  f.h2_dot_clf = sym2_pair(s, h2, f.cl_f);
  f.c1_squared = Rational(9) * f.h2_dot_clf;  // canonical class of F is 3 H|_F
  return f;
}

// ---- case table -------------------------------------------------------------

namespace {
constexpr int kDegWindow = 12;  // enumeration window for degrees
}

std::vector<CaseTriple> admissible_case_triples(const CaseConstraints& c) {
  std::vector<CaseTriple> out;
  const int dim_lo = c.dim_at_least_3 ? 3 : 1;
  for (int dim = dim_lo; dim <= 3; ++dim) {
    int lo = (dim == 3 && c.min_degree_3fold) ? 3 : 1;
    int hi = (dim == 3 && c.max_degree_3fold) ? 6 : kDegWindow;
    for (int d = lo; d <= hi; ++d) out.push_back({dim, d, 0});
  }
  const int deg_lo_4 = c.hypersurface_min_degree ? 2 : 1;
  for (int dy = deg_lo_4; dy <= kDegWindow; ++dy) {
    for (int df = 1; df <= kDegWindow; ++df) {
      if (c.product_bound && dy * df > 12) continue;
      if (c.adjunction_low_degf && df <= 2 && dy < 6) continue;
      out.push_back({4, dy, df});
    }
  }
  return out;
}

std::vector<CaseRow> enumerate_cases(const CaseConstraints& c) {
  const auto triples = admissible_case_triples(c);
  std::vector<CaseRow> rows;

  auto add_range_row = [&](int label, int dim, std::vector<CaseTriple> block,
                           bool range_over_deg_y, const std::string& note) {
    if (block.empty()) return;
    int ylo = block.front().deg_y, yhi = ylo;
    int flo = block.front().deg_f, fhi = flo;
    bool all12 = true;
    for (const auto& t : block) {
      ylo = std::min(ylo, t.deg_y);
      yhi = std::max(yhi, t.deg_y);
      flo = std::min(flo, t.deg_f);
      fhi = std::max(fhi, t.deg_f);
      if (t.deg_f == 0 || t.deg_y * t.deg_f != 12) all12 = false;
    }
    (void)range_over_deg_y;
    rows.push_back({label, dim, ylo, yhi, flo, fhi, all12, note});
  };

  for (int dim = 1; dim <= 2; ++dim) {
    std::vector<CaseTriple> block;
    for (const auto& t : triples)
      if (t.dim_y == dim) block.push_back(t);
    add_range_row(0, dim, block, true, "image dimension outside the expected range");
  }
  {
    std::vector<CaseTriple> block;
    for (const auto& t : triples)
      if (t.dim_y == 3) block.push_back(t);
    add_range_row(1, 3, block, true, "degree 6 subcase has finite base locus");
  }
  {
    std::vector<CaseTriple> block;
    for (const auto& t : triples)
      if (t.dim_y == 4 && t.deg_f >= 3 && t.deg_y == 2) block.push_back(t);
    add_range_row(2, 4, block, false, "");
  }
  {
    std::vector<CaseTriple> singles;
    for (const auto& t : triples)
      if (t.dim_y == 4 && t.deg_f >= 3 && t.deg_y != 2) singles.push_back(t);
    std::sort(singles.begin(), singles.end(), [](const CaseTriple& a, const CaseTriple& b) {
      return a.deg_y != b.deg_y ? a.deg_y < b.deg_y : a.deg_f < b.deg_f;
    });
    for (const auto& t : singles) {
      int label = 0;
      if (t.deg_y == 3 && t.deg_f == 3) label = 3;
      if (t.deg_y == 3 && t.deg_f == 4) label = 4;
      if (t.deg_y == 4 && t.deg_f == 3) label = 5;
      rows.push_back({label, 4, t.deg_y, t.deg_y, t.deg_f, t.deg_f,
                      t.deg_y * t.deg_f == 12, ""});
    }
  }
  {
    std::vector<CaseTriple> block;
    for (const auto& t : triples)
      if (t.dim_y == 4 && t.deg_f == 2) block.push_back(t);
    add_range_row(6, 4, block, true, "double cover via the covering involution");
  }
  {
    std::vector<CaseTriple> block;
    for (const auto& t : triples)
      if (t.dim_y == 4 && t.deg_f == 1) block.push_back(t);
    add_range_row(7, 4, block, true, "birational onto its image");
  }
  return rows;
}

std::vector<CaseRow> golden_case_table() {
  return {
      {1, 3, 3, 6, 0, 0, false, "degree 6 subcase has finite base locus"},
      {2, 4, 2, 2, 3, 6, false, ""},
      {3, 4, 3, 3, 3, 3, false, ""},
      {4, 4, 3, 3, 4, 4, true, ""},
      {5, 4, 4, 4, 3, 3, true, ""},
      {6, 4, 6, 6, 2, 2, true, "double cover via the covering involution"},
      {7, 4, 6, 12, 1, 1, false, "birational onto its image"},
  };
}

// ---- feasibility enumerations ----------------------------------------------

std::vector<std::pair<Rational, Rational>> intprop_feasible_set() {
  // 3(x + 5y) - (3x + 5y) = 10y, so the two constraints force -3 < 10y < 3;
  // likewise x is bounded once y is.  A window of half-integers with
  // |2x|, |2y| <= 40 is therefore far more than sufficient.
  std::vector<std::pair<Rational, Rational>> out;
  for (int kx = -40; kx <= 40; ++kx) {
    for (int ky = -40; ky <= 40; ++ky) {
      Rational x(kx, 2), y(ky, 2);
      Rational s3 = Rational(3) * x + Rational(5) * y;
      Rational s1 = x + Rational(5) * y;
      if (s3 > 0 && s3 < 3 && s1 >= 0 && s1 <= 1) out.emplace_back(x, y);
    }
  }
  return out;
}

CycleBalance cubic_case_cycle_arithmetic(const Sym2Space& s, const Vec& h) {
  CycleBalance b;
  const Vec h2 = sym2_product(s, h, h);
  const Rational h4 = sym2_pair(s, h2, h2);
  if (!is_integer(h4) || num(h4) % 6 != 0)
    throw PreconditionError("cycle arithmetic: h^4 must be a multiple of 6");

  // cl(curve) = m h^3/6 pairs with h to m h^4 / 6; budget is
  // 12 = deg Y . deg f + mult_sum + integral with mult_sum >= 1.
  const Int unit = num(h4) / 6;  // integral contributed per unit of m
  const Int budget = 12 - Int(b.deg_y) * b.deg_f;
  int solutions = 0;
  for (Int m = 1; m * unit < budget; ++m) {
    if (budget - m * unit >= 1) {
      ++solutions;
      b.m = m;
      b.integral_h = m * unit;
      b.mult_sum = budget - m * unit;
    }
  }
  b.unique_m = solutions == 1;
  b.balance_ok = Int(b.deg_y) * b.deg_f + b.mult_sum + b.integral_h == 12;

  // A divisor singular at a point of the curve contributes multiplicity >= 2,
  // and the curve still meets a general member in integral_h more points.
  b.contradiction_lhs = 2 + b.integral_h;
  b.contradiction_rhs = budget;
  b.infeasible = b.contradiction_lhs > b.contradiction_rhs;
  return b;
}

}  // namespace hk4
