#pragma once

// Projective points, restriction of forms to planes, Jacobian ranks, and
// local analysis of plane curves: multiplicity, tangent cone, reducedness,
// and the resulting double-point acceptance criterion.  Also the generic
// builder for linear systems of forms constrained along a parametrized
// rational curve.

#include <array>
#include <vector>

#include "hk4/matrix.hpp"
#include "hk4/multipoly.hpp"
#include "hk4/unipoly.hpp"

namespace hk4 {

// Homogeneous rational point, stored with its first nonzero coordinate
// normalized to 1 so that equality is plain coordinate equality.
struct ProjPoint {
  std::vector<Rational> x;
  bool operator==(const ProjPoint&) const = default;
};
ProjPoint make_proj_point(std::vector<Rational> coords);

Rational eval_at(const MultiPoly& p, const ProjPoint& v);

// Pull back a form in n variables to the plane spanned by three independent
// points: X_i -> sum_k Y_k span[k].x[i].  Throws if the points are dependent.
MultiPoly restrict_to_plane(const MultiPoly& p, const std::array<ProjPoint, 3>& span);

// Rank of the Jacobian matrix of the generators at a common zero.
int jacobian_rank_at(const std::vector<MultiPoly>& gens, const ProjPoint& v);

// Dehomogenize at the pivot coordinate of v and translate v to the origin;
// the result lives in nvars-1 variables and has zero constant term.
MultiPoly local_expansion(const MultiPoly& curve, const ProjPoint& v);

// Lowest total degree of the local expansion (curve must vanish at v).
int multiplicity_at(const MultiPoly& curve, const ProjPoint& v);

// Leading form of the local expansion of a plane curve (3 variables) as a
// binary form in the two chart coordinates.
BinaryForm tangent_cone(const MultiPoly& curve, const ProjPoint& v);
int tangent_cone_distinct_factors(const MultiPoly& curve, const ProjPoint& v);

// True when the local germ has no repeated factor through v: the gcd of the
// expansion with its two partials does not vanish at the origin.  Exact.
bool is_reduced_at(const MultiPoly& curve, const ProjPoint& v);

// Double-point acceptance for a reduced plane branch curve: multiplicity at
// most 2, or multiplicity exactly 3 with a tangent cone having at least two
// distinct linear factors.  Points off the curve are trivially accepted.
// Throws if the curve is not reduced at v.
bool du_val_plane_criterion(const MultiPoly& curve, const ProjPoint& v);

// Rank of the symmetric matrix of a homogeneous quadratic form.
int quadratic_form_rank(const MultiPoly& q);

// Forms of degree d in nvars variables constrained to vanish along the
// parametrized curve t -> [gamma_0(t), ..., gamma_{n-1}(t)], optionally with
// all first partials vanishing as well.  Conditions are the coefficients of
// t^0..t^K as exact linear forms in the monomial coefficients.  K defaults
// to the sharp bound d * max deg(gamma_i); smaller K truncates the system.
struct LinearSystem {
  std::vector<Monomial> monomials;
  Mat conditions;
  std::vector<Vec> kernel;
  int kernel_dim() const { return static_cast<int>(kernel.size()); }
};
LinearSystem linear_conditions(int d, int nvars, const std::vector<UniPoly>& curve,
                               bool double_vanish, int truncation = -1);
int linear_conditions_dim(int d, int nvars, const std::vector<UniPoly>& curve,
                          bool double_vanish, int truncation = -1);

// Assemble a polynomial of degree d from monomial coefficients (the vector is
// indexed like LinearSystem::monomials).
MultiPoly poly_from_coefficients(int d, int nvars, const Vec& coeffs);

}  // namespace hk4
