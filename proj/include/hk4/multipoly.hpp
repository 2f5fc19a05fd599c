#pragma once

// Sparse multivariate polynomials over the rationals with an exact
// round-tripping text format:  terms "coeff * X0^a0 * X1^a1" joined by
// " + " / " - ".  Variables are X0 .. X(n-1); the variable count is fixed
// per polynomial.

#include <map>
#include <string>
#include <vector>

#include "hk4/rational.hpp"

namespace hk4 {

using Monomial = std::vector<int>;  // exponent vector, one entry per variable

class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0);

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(int nvars, Monomial m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);
  Rational coeff(const Monomial& m) const;

  int total_degree() const;  // -1 for zero
  bool is_homogeneous(int* deg = nullptr) const;
  MultiPoly homogeneous_part(int d) const;

  Rational eval(const std::vector<Rational>& x) const;
  MultiPoly partial(int var) const;
  // Substitute every variable by a polynomial (all images share a variable
  // count, which becomes the result's).
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  MultiPoly pow(int e) const;

  MultiPoly scaled(const Rational& c) const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly&) const = default;

  std::string to_string() const;
  static MultiPoly parse(const std::string& text, int nvars);

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;  // zero coefficients never stored
};

// All exponent vectors of total degree d in n variables, ordered
// lexicographically.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace hk4
