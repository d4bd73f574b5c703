#pragma once

#include "distcalc/expression.hpp"
#include "distcalc/partial_fractions.hpp"

namespace distcalc {

/* Distributional Fourier transform under the convention
       phi_hat(k) = integral phi(x) e^{-ikx} dx.

   ft is a closed rule table over the atom basis and fails loudly
   (NotRepresentable / UnsupportedAtom) outside it.  Core rules:

     F[Pf H(x) x^g]        = Gamma(g+1) Pf(ix)^{-g-1}        (g not integer)
     F[Pf H(x) x^n]        = pi i^n delta^(n)
                             - i^{n+1} (-1)^n n! Pf x^{-n-1} (n >= 0)
     F[Pf x^{-m}]          = pi i^{-m} x^{m-1} sgn(x) / (m-1)!
     F[Pf sgn(x)/x^{m}]    = 2 (-ix)^{m-1}/(m-1)!
                             [H_{m-1} - euler_gamma - log|x|]
     F[x^n log|x|]         = (H_n - euler_gamma) 2 pi i^n delta^(n)
                             - pi n! (-i)^n Pf sgn(x)/x^{n+1}
     F[e^{iax}]            = 2 pi delta_a
     F[delta_a^(n)]        = (ix)^n e^{-iax}
     F[Pf(x-z)^{-j}]       = (2 pi i^j/(j-1)!) |x|^{j-1} e^{-i Re z x}
                             e^{-|Im z| |x|} on the half-line away from
                             the pole's side (complex z)
     decayed integer-power atoms map back to RationalPole combinations.

   Log-bearing atoms transform only in whole-line x^n log|x| pairings;
   an unpaired half-line log atom has no transform in the basis. */
Expression ft(const Expression& e);

// Inverse transform, (1/2pi) reflect(ft(e)); ift(ft(e)) = e.
Expression ift(const Expression& e);

// F[Pf R] for a rational R = P/Q via partial fractions: polynomial part
// to delta derivatives, complex poles to decayed atoms, real poles to
// oscillating sgn-power atoms (translation rule).  Works directly from
// the coefficient lists, so nonzero real poles are fine here.
Expression ft_rational(const RationalSpec& r);

enum class QuantumStat { Fermi, Bose };

// F of 1/(e^{beta x} +- 1): +-pi delta plus the sinh / coth kernel atom.
Expression ft_quantum_stat(QuantumStat kind, double beta);

}  // namespace distcalc
