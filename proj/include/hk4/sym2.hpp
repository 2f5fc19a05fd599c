#pragma once

// The symmetric square Sym^2 V of a nondegenerate inner-product space, with
// the induced pairing
//   <a1 a2, a3 a4> = (a1,a2)(a3,a4) + (a1,a3)(a2,a4) + (a1,a4)(a2,a3),
// the dual class q_dual = sum m_ij e_i e_j with (m_ij) the inverse Gram
// matrix, and the rank-23 decomposition machinery built on top of it.
//
// Coordinate convention: the monomial basis is {e_i e_j : i <= j} in
// lexicographic order.  An element written sum_{i,j} m_ij e_i e_j over ALL
// ordered pairs has coordinate m_ii on diagonal monomials and 2 m_ij on
// off-diagonal ones.

#include <utility>
#include <vector>

#include "hk4/lattice.hpp"
#include "hk4/matrix.hpp"

namespace hk4 {

struct Sym2Space {
  Mat gram_base;                                // Gram of the base space (n x n)
  int n = 0;                                    // base dimension
  int dim = 0;                                  // n(n+1)/2
  std::vector<std::pair<int, int>> monomials;   // (i,j), i <= j, lex order
  std::vector<std::vector<int>> monomial_index; // inverse of the above
  Mat pairing;                                  // induced pairing on monomials

  int index_of(int i, int j) const {
    return i <= j ? monomial_index[i][j] : monomial_index[j][i];
  }
};

Sym2Space make_sym2(const Mat& gram_base);

// Coordinates of the product class u.v (symmetric bilinear in u and v).
Vec sym2_product(const Sym2Space& s, const Vec& u, const Vec& v);

Rational sym2_pair(const Sym2Space& s, const Vec& a, const Vec& b);

// Base-space pairing as a Rational (works for rational vectors too).
Rational sym2_pair_base(const Sym2Space& s, const Vec& v, const Vec& w);

// Element sum_{i,j} m_ij e_i e_j for a full symmetric coefficient matrix m.
Vec sym2_from_coeff_matrix(const Sym2Space& s, const Mat& m);

// q_dual: coefficient matrix = inverse of the base Gram matrix.
Vec q_dual(const Sym2Space& s);

// Functorial coordinate transform: if the columns of t express new base
// vectors in old coordinates, returns S with old-coords = S . new-coords.
// Satisfies S(t1 t2) = S(t1) S(t2) and S(t^-1) = S(t)^-1.
Mat sym2_change_of_basis(const Sym2Space& s, const Mat& t);

// q_dual = (h,h)^{-1} h^2 + (dual of the form restricted to h-perp),
// verified exactly; requires (h,h) != 0.
struct QdecompResult {
  Vec q_dual_full;
  Vec h_square_part;  // (h,h)^{-1} h^2
  Vec q_h_dual;       // dual class of the restriction to h-perp
  bool residual_zero; // q_dual - h_square_part - q_h_dual == 0
};
QdecompResult qdecomp_check(const Sym2Space& s, const Vec& h);

// Orthogonal direct-sum decomposition of Sym^2 V for a vector h of square 2:
//   span{h^2, q_dual}  (+)  h . h-perp  (+)  W(h),
// where W(h) = Sym^2(h-perp) ∩ (q_dual)-perp.  The three blocks are
// pairwise orthogonal for the induced pairing; projectors are exact.
struct H4Decomposition {
  int dim_plane = 0;       // span{h^2, q_dual}
  int dim_h_hperp = 0;     // h . h-perp
  int dim_w = 0;           // W(h)
  Mat basis_plane, basis_h_hperp, basis_w;  // block bases as columns
  Mat p1, p2, p3;          // projectors onto the three blocks, p1+p2+p3 = 1
  Vec cucs;                // spans span{h^2,q_dual} ∩ (q_dual)-perp: n h^2 - (h,h) q_dual
  Vec spqr;                // spans span{h^2,q_dual} ∩ Sym^2(h-perp): h^2 - (h,h) q_dual
  bool blocks_orthogonal = false;  // cross Grams vanish
  bool projectors_valid = false;   // block Grams invertible, p1+p2+p3 == 1
  bool cucs_in_qdual_perp = false;
  bool spqr_in_sym2_hperp = false;
};
H4Decomposition decompose_h4(const Sym2Space& s, const Vec& h);

// Rank-two lattice spanned by h^2 and (2/5) q_dual inside Sym^2.
struct OmegaLattice {
  Mat gram;        // [[12,20],[20,92]] for the rank-23 main lattice
  Int disc;        // 704 = 2^6 . 11
  Int index_bound; // largest k with k^2 | disc: 8
};
OmegaLattice omega_lattice(const Sym2Space& s, const Vec& h);

// Pairing of x h^2 + y (2/5) q_dual with a Sym^2 element, as an exact linear
// form (coefficient of x, coefficient of y).
std::pair<Rational, Rational> pair_with_omega(const Sym2Space& s, const Vec& h, const Vec& w);

// Square-class comparison of two determinant chains that an isometry would
// force into the same class of Q*/(Q*)^2:
//  - a rank-22 integer form of |det| 3 with the pairing scaled by 4, and
//  - the Gram of {h . b_i} for an integral basis b_i of h-perp, whose
//    determinant is 2^22 . disc(h-perp) (the complement is computed, not
//    assumed).
struct SquareClassObstruction {
  Int det_scaled_form;   // 3 . 4^22
  Int det_h_multiples;   // 2^24
  Int disc_hperp;        // 4 (computed via orthogonal_complement)
  Int class_scaled_form; // 3
  Int class_h_multiples; // 1
  bool same_class;       // false: the two classes differ
};
SquareClassObstruction square_class_obstruction(const Lattice& l, const Vec& h);

}  // namespace hk4
