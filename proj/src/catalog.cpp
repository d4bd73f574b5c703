#include "distcalc/catalog.hpp"

#include "distcalc/builders.hpp"

namespace distcalc {

std::vector<CatalogEntry> transform_catalog() {
  return {
      {"Vp(1/x)", vp_recip()},
      {"sgn(x)", sgn()},
      {"H(x)", heaviside(1)},
      {"delta", delta(0)},
      {"delta'", delta(1)},
      {"delta''", delta(2)},
      {"delta'''", delta(3)},
      {"Pf(x^0.5)", pf_power(0.5)},
      {"Pf(x^-0.5)", pf_power(-0.5)},
      {"Pf(x^1.5)", pf_power(1.5)},
      {"Pf(x^-1.5)", pf_power(-1.5)},
      {"Pf(x^2)", pf_power(2.0)},
      {"Pf(x^-2)", pf_power(-2.0)},
      {"log|x|", log_abs()},
  };
}

// Fractional orders compose associatively only where the transform
// stays clear of the delta sector (multiplying x^a into delta
// derivatives at non-integer a < n leaves the sector for good, the
// same obstruction as the classical (1/x)(x delta) example).  The
// semigroup catalog therefore draws on distributions with regular
// transforms; polynomials and the step function keep the property for
// integer orders only (see the extension suite).
std::vector<CatalogEntry> semigroup_catalog() {
  return {
      {"Vp(1/x)", vp_recip()},
      {"sgn(x)", sgn()},
      {"delta", delta(0)},
      {"delta'", delta(1)},
      {"delta''", delta(2)},
      {"Pf(x^0.5)", pf_power(0.5)},
      {"Pf(x^-0.5)", pf_power(-0.5)},
      {"Pf(x^-1.5)", pf_power(-1.5)},
      {"Pf(|x|^0.5)", pf_abs_power(0.5)},
      {"exp(i*2*x)", harmonic(2.0)},
  };
}

}  // namespace distcalc
