#pragma once

// Pipeline around cubic hypersurfaces in P^5 with one or two double points:
// coordinate adaptation at a node, the inverse of projection from the node,
// transfer of singularities to the surface of lines through the node, the
// two-node discriminant quartic with its exact determinant factorization,
// branch divisors of conic fibrations, chord varieties of rational normal
// curves, interpolation of the plane-swept cubic attached to a net of binary
// cubics, and a worked two-quadric example with its pencil discriminant.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hk4/matrix.hpp"
#include "hk4/multipoly.hpp"
#include "hk4/polygeom.hpp"
#include "hk4/unipoly.hpp"

namespace hk4 {

// Cubic in 6 variables with a double point moved to [0,...,0,1]:
// adapted = F(X0..X4) * X5 + G(X0..X4) with F a nonzero quadric, G a cubic.
struct CubicWithNode {
  MultiPoly f;        // quadric, 5 variables
  MultiPoly g;        // cubic, 5 variables
  Mat transform;      // unimodular 6x6, new coordinates -> original
  MultiPoly adapted;  // the cubic in the new coordinates (6 variables)
  bool no_common_factor_on_line;  // F, G coprime along a seeded test line
};

// Move p to [0,...,0,1] by a unimodular change and split off F and G.
// Throws if p is not a double point or if the quadric part vanishes (cone).
CubicWithNode adapt_to_node(const MultiPoly& cubic, const ProjPoint& p,
                            std::uint64_t seed = 1);

// Inverse of the projection from the node: x -> [F(x) x0, ..., F(x) x4, -G(x)].
// Throws when F(x) = G(x) = 0 (the indeterminacy locus / lines through p).
std::vector<Rational> psi_inverse(const CubicWithNode& c, const ProjPoint& x);

// Transfer of a singular point y of the cubic (y != node) to the surface of
// lines V(F, G) through the node.
struct SingReport {
  ProjPoint s;            // projection of y away from the node
  bool y_singular;        // all six partials of the cubic vanish at y
  bool s_on_surface;      // F(s) = G(s) = 0
  bool s_singular_on_surface;  // Jacobian of (F, G) at s has rank < 2
  int theta_dim;          // tangent-space dimension of V(F,G) at s; -1 if s off it
  bool f_smooth_at_s;     // gradient of F does not vanish at s
};
SingReport sing_correspondence(const CubicWithNode& c, const ProjPoint& y);

// Cubic with double points at [0,0,0,0,1,0] and [0,0,0,0,0,1]:
//   cubic = Bhat + Chat Z0 + Dhat Z1 + Fhat Z0 Z1
// in X = (X0..X3), Z0 = X4, Z1 = X5, with Bhat = sum X_j B_j and so on.
// The discriminant of the residual conic fibration over P^3 is det M with
//   M = [[0, Fhat, Chat], [Fhat, 0, Dhat], [Chat, Dhat, Bhat]],
// which factors exactly as Fhat * P with P = 2 Chat Dhat - Bhat Fhat.
struct TwoNodeData {
  std::vector<MultiPoly> b, c, d;  // B_j, C_j, D_j for j = 0..3 (4 variables)
  Vec f;                           // constants F_j
  MultiPoly bhat, chat, dhat, fhat;
  MultiPoly p;                     // the quartic 2 Chat Dhat - Bhat Fhat
  bool reconstructs;               // the split reassembles the input cubic
  bool det_identity;               // det M == Fhat * P as polynomials
  bool gradient_identity;          // dP/dX_s == 2 Cs Dhat + 2 Chat Ds - Bs Fhat - Bhat F_s
  bool fibers_in_p;                // V(Fhat, Dhat) and V(Fhat, Chat) sample points lie on V(P)
  bool no_common_zero_on_line;     // Bhat, Chat, Dhat, Fhat have no common zero on a seeded line
};
TwoNodeData two_node_discriminant(const MultiPoly& cubic, std::uint64_t seed = 1);

// Discriminant of A Z^2 + B Z + C with deg A, B, C = 1, 2, 3: returns
// B^2 - 4 A C (degree 4).
MultiPoly branch_divisor(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c);

// Degree of the chord (secant) variety of a curve of degree d and genus g in
// the expected-dimension case: (d-1)(d-2)/2 - g.
Int chord_secant_degree(int d, int g);

// The 3x3 Hankel determinant det [[X0,X1,X2],[X1,X2,X3],[X2,X3,X4]]: the
// cubic 3-fold swept by the chords of the degree-4 rational normal curve.
MultiPoly chord_rnc4_cubic();

// Three linearly independent binary cubics spanning a net of degree-3
// divisors on the line, mapped to the degree-5 rational normal curve.
struct NetOnQuinticRNC {
  std::array<BinaryForm, 3> basis;
};
NetOnQuinticRNC make_net(const std::array<BinaryForm, 3>& basis);

// Interpolate the cubic 4-fold swept by the planes spanned by the divisors
// of the net: sample rational points on many such planes and solve for the
// unique cubic in 6 variables through all of them.
struct YgFit {
  MultiPoly cubic;       // normalized: first nonzero coefficient is 1
  int kernel_dim;        // 1 when the fit is unique
  int sample_count;
  int plane_count;
  bool double_vanish_on_curve;  // value and all partials vanish along the curve (identity in t)
  bool in_double_kernel;        // coefficients satisfy the double-vanishing linear system
  int cone_space_dim;           // dimension of { v : directional derivative along v is 0 }
  std::vector<Rational> cone_vertex;  // a vertex when cone_space_dim >= 1, else empty
  std::string content_hash;     // FNV-1a hash of the canonical text form
};
YgFit y_g_fit(const NetOnQuinticRNC& net, std::uint64_t seed = 1);

// Worked example of a cubic containing a 3-space: Y = V(F X4 + G X5) with
// F = X0 X1 + X2 X3 (rank 4) and G = X0^2+X1^2+X2^2+X3^2+X5^2 (rank 5).
// The hyperplanes through V(X4, X5) cut residual quadrics whose 5x5
// discriminant delta(lambda) is a nonconstant polynomial, so the pencil
// contains both smooth and singular quadrics.
struct TantipianiReport {
  MultiPoly f, g;                  // the two quadrics (6 variables)
  int rank_f, rank_g;
  UniPoly delta;                   // discriminant of the residual quadric
  bool delta_nonconstant;
  Rational sample_root;            // a rational root of delta
  MultiPoly residual_at_root;      // the singular residual quadric (5 variables)
  ProjPoint singular_point;        // a singular point of it
  int jacobian_rank_at_point;      // 0: genuinely singular
};
TantipianiReport tantipiani_example();

// Evaluate a polynomial along a parametrized rational curve (exact
// composition; components indexed like the variables).
UniPoly compose_curve(const MultiPoly& p, const std::vector<UniPoly>& curve);

// The degree-5 rational normal curve t -> [1, t, t^2, t^3, t^4, t^5].
std::vector<UniPoly> quintic_rnc();
// The degree-4 rational normal curve t -> [1, t, t^2, t^3, t^4].
std::vector<UniPoly> quartic_rnc();

// FNV-1a 64-bit hash rendered as hex; used for stable content fingerprints.
std::string fnv1a_hex(const std::string& data);

}  // namespace hk4
