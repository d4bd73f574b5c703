#pragma once

#include <string>

#include "distcalc/expression.hpp"

namespace distcalc {

// Order of derivation; negative values are anti-derivatives.
struct FracOrder {
  double alpha = 0.0;
};

/* D^a T = F^{-1} (ix)^a F T, computed as
       ift( i^a * mul_monomial(a, ft(e)) )
   with i^a = e^{i a pi/2} on the branch.  D^0 is the identity.  For
   positive integers a this coincides with the classical distributional
   derivative; composition D^a D^b = D^{a+b} holds within each sign
   class of orders and, for mixed signs, on expressions whose transform
   is free of delta atoms. */
Expression frac_d(FracOrder alpha, const Expression& e);
inline Expression frac_d(double alpha, const Expression& e) {
  return frac_d(FracOrder{alpha}, e);
}

/* Closed forms for the monomial families, used only as independent
   cross-checks of the pipeline:

     n >= 0:  D^a x^n = 0 for a > n, else Gamma(n+1)/Gamma(n-a+1) Pf x^{n-a}
     n  < 0, m = -n, a integer:
              D^a Pf x^{-m} = (-1)^a Gamma(m+a)/Gamma(m) Pf x^{-m-a}
                                                      when m + a >= 1
              D^a Pf x^{-m} = (-1)^m/((m-1)! k!) [H_k - g - log|x|] x^k,
                              k = -m-a                when m + a < 1
     n  < 0, a not an integer:
              D^a Pf x^{-m} = i^{a-m} Gamma(m+a)/(2 Gamma(m))
                              [Pf(-ix)^{-m-a}
                               - (-1)^{m+1} e^{-i pi a} Pf(ix)^{-m-a}]
*/
Expression closed_form_power(double alpha, int n);

struct SemigroupReport {
  Expression lhs;  // frac_d(alpha, frac_d(beta, e))
  Expression rhs;  // frac_d(alpha + beta, e)
  bool equal = false;
  double tol = 1e-10;
  bool order_dependent = false;  // set when the signs of alpha, beta differ
  std::string note;
};

// Compare composition against the summed order at the given tolerance.
// Failures are report content, never exceptions.
SemigroupReport check_semigroup(double alpha, double beta,
                                const Expression& e, double tol = 1e-10);

// (D D^{-1} H, D^{-1} D H) = (H, sgn/2): the canonical mixed-sign
// counterexample, kept as a regression pair.
std::pair<Expression, Expression> noncommutativity_demo();

}  // namespace distcalc
