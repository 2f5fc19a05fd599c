#pragma once

// Square classes in Q* / (Q*)^2, represented by squarefree integers.

#include "hk4/rational.hpp"

namespace hk4 {

// Floor of the square root of a nonnegative integer.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

// The squarefree integer s with n = s * k^2, sign preserved; 0 maps to 0.
// Uses trial division below 2^20; the remaining cofactor is certified
// squarefree (or a perfect square) by a bound argument, so the result is
// exact for |n| < 2^60 beyond the trial range.  Throws PreconditionError if
// exactness cannot be certified.
Int squarefree_part(Int n);

// Representative of q in Q*/(Q*)^2: squarefree_part(numerator*denominator).
// Throws PreconditionError on q == 0.
Int square_class(const Rational& q);

}  // namespace hk4
