#pragma once

// Exact scalar types.  Everything in this library computes over arbitrary
// precision integers and rationals; no floating point is used anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hk4 {

using Int = boost::multiprecision::cpp_int;
// Normalized rational: denominator > 0 and coprime to the numerator.
// boost::multiprecision::cpp_rational maintains this form canonically.
using Rational = boost::multiprecision::cpp_rational;

// Raised when an operation's mathematical precondition is violated
// (singular matrix, point off the variety, infeasible search, ...).
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised when textual input (polynomials, lattice expressions, CLI
// arguments) cannot be parsed.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// Exact conversion to Int; throws unless q is integral.
inline Int to_int(const Rational& q) {
  if (!is_integer(q)) throw PreconditionError("expected an integer, got " + q.str());
  return num(q);
}

inline Rational rat(long long n) { return Rational(n); }
inline Rational rat(long long n, long long d) { return Rational(n) / Rational(d); }

// q^e for integer e (e may be negative when q != 0).
inline Rational pow_rat(const Rational& q, long long e) {
  if (e < 0) {
    if (q == 0) throw PreconditionError("0 cannot be raised to a negative power");
    Rational inv = Rational(den(q)) / Rational(num(q));
    return pow_rat(inv, -e);
  }
  Rational out = 1, base = q;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

}  // namespace hk4
