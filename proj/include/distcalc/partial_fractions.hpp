#pragma once

#include <vector>

#include "distcalc/scalar.hpp"

namespace distcalc {

// R(x) = P(x)/Q(x) with complex coefficient lists, constant term first.
struct RationalSpec {
  std::vector<Complex> num;
  std::vector<Complex> den;
};

struct PoleGroup {
  Complex z;
  int mult = 1;
  // coeffs[j-1] = a_j in  sum_j a_j / (x - z)^j,  j = 1..mult.
  std::vector<Complex> coeffs;
};

// R = poly + sum over poles of sum_j a_ij / (x - z_i)^j.
struct PartialFractions {
  std::vector<Complex> poly;
  std::vector<PoleGroup> poles;
};

// Polynomial division plus residue extraction.  Roots come from a
// companion-matrix eigenvalue solve; roots closer than cluster_tol are
// merged into one pole of higher multiplicity.  The reconstruction is
// checked at sample points to 1e-8 relative; IllConditioned if the
// clustering is ambiguous or the check fails.
PartialFractions partial_fractions(const RationalSpec& r,
                                   double cluster_tol = 1e-9);

// Evaluate P(x) with coefficient list (constant term first).
Complex poly_eval(const std::vector<Complex>& coeffs, Complex x);

}  // namespace distcalc
