#pragma once

// Dense univariate polynomials over the rationals, plus binary forms
// (homogeneous bivariate) built on top of them.  Everything is exact; root
// multiplicity questions are answered through gcds with derivatives, never
// through numeric root finding.

#include <utility>
#include <vector>

#include "hk4/rational.hpp"

namespace hk4 {

class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial
  explicit UniPoly(std::vector<Rational> coeffs);  // coeffs[i] multiplies x^i

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(int deg, const Rational& coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly scaled(const Rational& c) const;
  UniPoly monic() const;  // throws PreconditionError on zero

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  bool operator==(const UniPoly&) const = default;

  // Quotient and remainder; the divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  // Exact division; throws PreconditionError if the remainder is nonzero.
  static UniPoly exact_div(const UniPoly& a, const UniPoly& b);
  // Monic gcd (zero if both inputs are zero).
  static UniPoly gcd(UniPoly a, UniPoly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Number of distinct complex roots: deg p - deg gcd(p, p').
int distinct_root_count(const UniPoly& p);

// Homogeneous form of declared degree in two variables s, t:
//   sum_i c[i] s^(deg - i) t^i.
struct BinaryForm {
  std::vector<Rational> c;
  int deg = 0;
};

BinaryForm make_binary_form(std::vector<Rational> coeffs, int deg);
Rational binary_eval(const BinaryForm& f, const Rational& s, const Rational& t);
bool binary_is_zero(const BinaryForm& f);

// Distinct projective roots over the complex numbers, counting [1:0] once
// when the form is divisible by t... i.e. when the dehomogenization at s = 1
// drops degree.  Throws on the zero form.
int binary_distinct_projective_roots(const BinaryForm& f);

// Exact division by the linear form (beta s - alpha t), whose projective root
// is [alpha : beta].  Throws PreconditionError if [alpha : beta] is not a root.
BinaryForm binary_divide_root(const BinaryForm& f, const Rational& alpha,
                              const Rational& beta);

// The projective root [alpha : beta] of a nonzero linear binary form.
std::pair<Rational, Rational> binary_linear_root(const BinaryForm& f);

}  // namespace hk4
