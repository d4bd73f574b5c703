#pragma once

#include "distcalc/expression.hpp"

namespace distcalc {

/* Multiplication by the monomial x^alpha under the branch.

   Half-line atoms shift their exponent, gamma += alpha, with an extra
   e^{-i pi alpha} on the negative axis (x = -|x| carries arg -pi).

   delta_0^(n):
       0                          if alpha > n
       (-1)^n n! delta            if alpha = n
       i^{-(n+alpha)} (n!/Gamma(n-alpha+1)) (1/2pi) F[Pf x^{n-alpha}]
                                  if alpha < n   (expanded in closed form)
   delta_a (order 0, a != 0): a^alpha delta_a under the branch.

   The operation is not associative across exponent signs (the Schwartz
   (1/x * x) delta != 1/x (x delta) example survives by construction);
   compositions with mixed signs are order-dependent. */
Expression mul_monomial(double alpha, const Expression& e);

// Classical distributional derivative applied atom-wise, n >= 1.
// Includes boundary deltas at 0 for half-line atoms (D[H] = delta,
// D[Pf H(x) x^{-m}] picks up ((-1)^m/m!) delta^(m)).
Expression derivative(const Expression& e, int n = 1);

}  // namespace distcalc
