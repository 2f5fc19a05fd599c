#pragma once

// Integral lattices with exact Gram arithmetic: the standard constructors
// (hyperbolic plane U, negated E8, rank-one <n>), direct sums, vector
// invariants (norm, divisibility, primitivity), saturated orthogonal
// complements, bounded searches, and a small text format for lattice
// expressions such as "U + U + U + E8(-1) + E8(-1) + <-2>".

#include <string>
#include <vector>

#include "hk4/matrix.hpp"

namespace hk4 {

struct Lattice {
  Mat gram;          // integral, symmetric, nondegenerate
  std::string expr;  // display form, round-trips through parse_lattice_expr

  int rank() const { return gram.rows(); }
};

Lattice make_U();
Lattice make_E8_neg();              // negated E8 Cartan matrix, unimodular, negative definite
Lattice make_rank1(long long n);    // <n>, single basis vector of square n
Lattice direct_sum(const Lattice& a, const Lattice& b);

// U^3 + E8(-1)^2 + <-2>: rank 23, |disc| = 2, signature (3,20).
Lattice make_main_lattice();

// Pairing of two integer vectors in basis coordinates; exact.
Int pairing(const Lattice& l, const Vec& v, const Vec& w);
Int norm_of(const Lattice& l, const Vec& v);

// gcd over the basis pairings {(v, e_i)}; v must be integral and nonzero.
Int divisibility(const Lattice& l, const Vec& v);

bool is_primitive_vector(const Vec& v);  // integral with coprime coordinates

struct OrbitInvariants {
  Int norm;
  Int div;
  bool primitive;
  bool operator==(const OrbitInvariants&) const = default;
};
OrbitInvariants orbit_invariants(const Lattice& l, const Vec& v);

// Kernel over Z of an integral matrix (saturated by construction); basis
// columns come from the Smith-form column transform.
std::vector<Vec> integer_kernel(const Mat& m);

// Saturated basis of {w in L : (v, w) = 0}; v integral, nonzero.
std::vector<Vec> orthogonal_complement(const Lattice& l, const Vec& v);

// Gram of the sublattice spanned by the given vectors: B^T G B.
Mat restricted_gram(const Lattice& l, const std::vector<Vec>& basis);

Int disc(const Lattice& l);          // det of the Gram matrix (signed)
Inertia signature(const Lattice& l);
std::vector<Int> lattice_invariant_factors(const Lattice& l);

// First integral beta (deterministic order) with (beta,beta) = 0 and
// (alpha,beta) = 1, searching supports of growing size (up to 4 coordinates)
// with coefficients in [-box, box].  Throws PreconditionError when the
// search space is exhausted.
Vec find_isotropic_partner(const Lattice& l, const Vec& alpha, int box = 3);

// All nonzero integer vectors with coefficients in [-box, box] and square
// equal to target, in lexicographic order.  Guarded against oversized boxes.
std::vector<Vec> enumerate_square_vectors(const Lattice& l, const Int& target, int box);

// Text format: terms separated by '+', each "U", "E8(-1)" or "<n>".
Lattice parse_lattice_expr(const std::string& text);

}  // namespace hk4
