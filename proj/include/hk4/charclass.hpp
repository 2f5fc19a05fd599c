#pragma once

// Characteristic-class arithmetic for the rank-23 model: the degree-2
// Riemann-Roch polynomial, the second Chern class as a multiple of q_dual,
// fixed-surface invariants of the covering involution, the seven-row case
// table for the image of the degree-6 map, and two exact feasibility
// enumerations.
//
// Model axioms used as inputs (recorded in verification reports):
//   chi(O) = 3, topological Euler characteristic = 324 (= c_4), b_3 = 0,
//   and the degree-4 form is the symmetric square of the degree-2 one.

#include <string>
#include <utility>
#include <vector>

#include "hk4/sym2.hpp"

namespace hk4 {

struct RRProfile {
  Rational chi_structure;  // 3
  Int c4;                  // 324
  Rational c2_square;      // <c2,c2> = 240 chi + c4/3 = 828
  Rational c2_coefficient; // a with c2 = a q_dual: 6/5 (sign fixed by pseudoeffectivity)
  Rational c2_dot_h2;      // <c2, h^2> = 60
  bool consistency_240;    // 240 chi == c2_square - c4/3
};
RRProfile solve_c2(const Sym2Space& s, const Vec& h);

// chi(O(nH)) = (1/24)(h^4) n^4 + (1/24)<c2,h^2> n^2 + chi(O)
//            = n^4/2 + 5 n^2/2 + 3 for the main lattice with (h,h) = 2.
struct ChiPolynomial {
  Rational n4_coeff, n2_coeff, n0_coeff;
  Rational eval(long long n) const {
    Rational nn = Rational(n) * n;
    return n4_coeff * nn * nn + n2_coeff * nn + n0_coeff;
  }
};
ChiPolynomial chi_of_nh(const Sym2Space& s, const Vec& h);

// Invariants of the fixed surface F of the covering involution, all exact
// and each obtained by two independent routes where the model provides one.
struct FixedSurfaceInvariants {
  int b4_quotient;          // 1 + dim Sym^2(h-perp) = 254
  int chi_quotient;         // 258
  int chi_total;            // 324
  Rational chi_f_euler;     // 192 from 324 = 2(258 - chi_F) + chi_F
  Rational chi_f_square;    // 192 = <cl(F), cl(F)>
  Vec cl_f;                 // 5 h^2 - (1/3) c2 = 5 h^2 - (2/5) q_dual
  Rational fifteen_square;  // <(15 h^2 - c2)^2> = 1728 = 9 . 192
  Rational h2_dot_clf;      // <h^2, cl(F)> = 40
  Rational c1_squared;      // 9 . 40 = 360 (canonical class is 3 times the polarization)
};
FixedSurfaceInvariants fixed_surface(const Sym2Space& s, const Vec& h);

// ---- case table -------------------------------------------------------------

struct CaseRow {
  int label;        // 1..7 for the expected shapes, 0 for anything else
  int dim_y;
  int deg_y_min, deg_y_max;
  int deg_f_min, deg_f_max;  // 0,0 when the fiber degree is not constrained
  bool base_empty;           // every triple in the row has deg Y . deg f = 12
  std::string note;
  bool operator==(const CaseRow&) const = default;
};

// Individually removable constraints (mutation testing): defaults reproduce
// the seven-row golden table.
struct CaseConstraints {
  bool dim_at_least_3 = true;        // image dimension 3 or 4 only
  bool min_degree_3fold = true;      // nondegenerate 3-fold image: deg >= 3
  bool max_degree_3fold = true;      // 3-fold image: deg <= 6
  bool hypersurface_min_degree = true;  // 4-fold image: deg >= 2
  bool product_bound = true;         // deg Y . deg f <= 12
  bool adjunction_low_degf = true;   // deg f <= 2 forces deg Y >= 6
};

std::vector<CaseRow> enumerate_cases(const CaseConstraints& c = {});
std::vector<CaseRow> golden_case_table();

// Raw admissible (dim Y, deg Y, deg f) triples under the constraints;
// deg f = 0 marks "not applicable" for 3-dimensional images.
struct CaseTriple {
  int dim_y, deg_y, deg_f;
  bool operator==(const CaseTriple&) const = default;
};
std::vector<CaseTriple> admissible_case_triples(const CaseConstraints& c = {});

// ---- feasibility enumerations ----------------------------------------------

// Half-integer pairs (x, y) with 0 < 3x + 5y < 3 and 0 <= x + 5y <= 1.
// The constraints bound 10y strictly between -3 and 3, so the search box is
// provably sufficient; the unique solution is (1/2, 0).
std::vector<std::pair<Rational, Rational>> intprop_feasible_set();

// Exact 1-cycle bookkeeping in the cubic-image case (deg Y = deg f = 3):
//   12 = deg Y . deg f + mult_sum + integral_h,  integral_h = 2m from
//   cl(curve) = m h^3/6, mult_sum >= 1.  Forces m = 1 and reproduces the
//   contradiction 4 <= 3 when a divisor is singular at a curve point.
struct CycleBalance {
  int deg_y = 3, deg_f = 3;
  Int m;                // 1
  Int integral_h;       // 2
  Int mult_sum;         // 1
  bool balance_ok;      // 9 + 1 + 2 == 12
  bool unique_m;        // no other positive m satisfies the constraints
  Int contradiction_lhs;  // 4 = forced multiplicity 2 + integral 2
  Int contradiction_rhs;  // 3 = available total
  bool infeasible;        // lhs > rhs: the configuration cannot exist
};
CycleBalance cubic_case_cycle_arithmetic(const Sym2Space& s, const Vec& h);

}  // namespace hk4
