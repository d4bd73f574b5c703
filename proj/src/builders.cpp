#include "distcalc/builders.hpp"

#include <cmath>

namespace distcalc {

Expression vp_recip() {
  Expression e;
  e.terms.push_back({1.0, power_atom(Side::Positive, -1.0)});
  e.terms.push_back({-1.0, power_atom(Side::Negative, -1.0)});
  return e;
}

Expression pf_power(double gamma) {
  Expression e;
  e.terms.push_back({1.0, power_atom(Side::Positive, gamma)});
  e.terms.push_back(
      {branch_pow(-1.0, gamma), power_atom(Side::Negative, gamma)});
  return canonicalize(e);
}

Expression pf_abs_power(double gamma) {
  Expression e;
  e.terms.push_back({1.0, power_atom(Side::Positive, gamma)});
  e.terms.push_back({1.0, power_atom(Side::Negative, gamma)});
  return e;
}

Expression pf_ix_power(int sign, double beta) {
  if (sign != 1 && sign != -1) throw DomainError("pf_ix_power: sign");
  const Complex unit(0.0, static_cast<double>(sign));
  Expression e;
  e.terms.push_back(
      {branch_pow(unit, beta), power_atom(Side::Positive, beta)});
  e.terms.push_back(
      {branch_pow(-unit, beta), power_atom(Side::Negative, beta)});
  return e;
}

Expression heaviside(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("heaviside: sign");
  return Expression(
      1.0, power_atom(sign == 1 ? Side::Positive : Side::Negative, 0.0));
}

Expression sgn() {
  Expression e;
  e.terms.push_back({1.0, power_atom(Side::Positive, 0.0)});
  e.terms.push_back({-1.0, power_atom(Side::Negative, 0.0)});
  return e;
}

Expression one() {
  Expression e;
  e.terms.push_back({1.0, power_atom(Side::Positive, 0.0)});
  e.terms.push_back({1.0, power_atom(Side::Negative, 0.0)});
  return e;
}

Expression constant(Complex c) { return c * one(); }

Expression log_abs() {
  Expression e;
  e.terms.push_back({1.0, power_atom(Side::Positive, 0.0, 1)});
  e.terms.push_back({1.0, power_atom(Side::Negative, 0.0, 1)});
  return e;
}

Expression log_x() {
  Expression e = log_abs();
  e.terms.push_back({Complex(0.0, -kPi), power_atom(Side::Negative, 0.0)});
  return e;
}

Expression polynomial(const std::vector<Complex>& coeffs) {
  Expression e;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == Complex(0.0)) continue;
    const double g = static_cast<double>(k);
    const double neg = (k % 2 == 0) ? 1.0 : -1.0;
    e.terms.push_back({coeffs[k], power_atom(Side::Positive, g)});
    e.terms.push_back({neg * coeffs[k], power_atom(Side::Negative, g)});
  }
  return canonicalize(e);
}

Expression harmonic(double a) { return Expression(1.0, harmonic_atom(a)); }

Expression delta(int order, double shift) {
  return Expression(1.0, delta_atom(order, shift));
}

Expression rational(const RationalSpec& r) {
  const PartialFractions pf = partial_fractions(r);
  Expression e = polynomial(pf.poly);
  for (const auto& pg : pf.poles) {
    const bool real_pole = pg.z.imag() == 0.0;
    const bool at_origin = real_pole && std::abs(pg.z.real()) < 1e-9;
    for (int j = 1; j <= pg.mult; ++j) {
      const Complex a = pg.coeffs[j - 1];
      if (a == Complex(0.0)) continue;
      if (!real_pole) {
        e.terms.push_back({a, pole_atom(pg.z, j)});
      } else if (at_origin) {
        e += a * pf_power(static_cast<double>(-j));
      } else {
        throw NotRepresentable(
            "rational: nonzero real pole has no 0-centered atom expansion");
      }
    }
  }
  return canonicalize(e);
}

}  // namespace distcalc
