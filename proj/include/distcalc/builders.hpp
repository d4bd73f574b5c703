#pragma once

#include "distcalc/expression.hpp"
#include "distcalc/partial_fractions.hpp"

namespace distcalc {

/* Builders for the standard whole-line objects.  Branch decompositions:

     x^g      = H(x) x^g + e^{-i pi g} H(-x)|x|^g     (arg x = -pi on R^-)
     (ix)^b   = e^{+i b pi/2} H(x) x^b + e^{-i b pi/2} H(-x)|x|^b
     (-ix)^b  = e^{-i b pi/2} H(x) x^b + e^{+i b pi/2} H(-x)|x|^b
     log x    = log|x| - i pi H(-x)
*/

Expression vp_recip();                    // Vp 1/x
Expression pf_power(double gamma);        // Pf x^gamma under the branch
Expression pf_abs_power(double gamma);    // Pf |x|^gamma
Expression pf_ix_power(int sign, double beta);  // Pf(+ix)^b / Pf(-ix)^b
Expression heaviside(int sign);           // H(x) for +1, H(-x) for -1
Expression sgn();
Expression one();                         // the constant function 1
Expression constant(Complex c);
Expression log_abs();                     // log|x|
Expression log_x();                       // log x (complex on R^-)
Expression polynomial(const std::vector<Complex>& coeffs);  // sum c_k x^k
Expression harmonic(double a);            // e^{iax}
Expression delta(int order = 0, double shift = 0.0);
// Pf R(x).  Complex poles become RationalPole atoms; a real pole at the
// origin expands into Pf x^{-j} atoms; nonzero real poles have no
// finite 0-centered atom decomposition and raise NotRepresentable
// (their transforms are still available through ft_rational).
Expression rational(const RationalSpec& r);

}  // namespace distcalc
