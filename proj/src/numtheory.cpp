#include "hk4/numtheory.hpp"

namespace hk4 {

Int isqrt(const Int& n) {
  if (n < 0) throw PreconditionError("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int s = isqrt(n);
  return s * s == n;
}

Int squarefree_part(Int n) {
  if (n == 0) return 0;
  Int result = n < 0 ? -1 : 1;
  if (n < 0) n = -n;

  constexpr long long kTrialBound = 1 << 20;
  for (long long p = 2; p <= kTrialBound && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e & 1) result *= p;
  }
  if (n == 1) return result;
  if (is_perfect_square(n)) return result;  // leftover square contributes nothing
  // Every prime factor of the leftover exceeds kTrialBound (or the trial loop
  // ran to completion), so a leftover below kTrialBound^3 that is not a
  // perfect square has at most two prime factors, each single: squarefree.
  if (n >= Int(kTrialBound) * kTrialBound * kTrialBound)
    throw PreconditionError("squarefree_part: cannot certify cofactor " + n.str());
  return result * n;
}

Int square_class(const Rational& q) {
  if (q == 0) throw PreconditionError("square_class of 0 is undefined");
  return squarefree_part(num(q) * den(q));
}

}  // namespace hk4
