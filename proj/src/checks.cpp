#include <cmath>

#include "distcalc/builders.hpp"
#include "distcalc/numcheck.hpp"

namespace distcalc {

namespace {

Complex minus_i_pow(int j) {
  switch (((j % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

}  // namespace

FtCheckReport check_ft(const Expression& e, int jmax, double tol) {
  FtCheckReport rep;
  rep.tol = tol;
  const Expression fe = ft(e);
  for (int j = 0; j <= jmax; ++j) {
    const HermiteFunction h(j);
    const Complex lhs = pair(fe, h).value;
    const Complex rhs =
        std::sqrt(2.0 * kPi) * minus_i_pow(j) * pair(e, h).value;
    const double dev = std::abs(lhs - rhs);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    const bool pass = dev <= tol * scale;
    rep.rows.push_back({j, lhs, rhs, dev, pass});
    rep.all_pass = rep.all_pass && pass;
  }
  return rep;
}

bool hermite_eigenrelation_gate(int jmax, double tol) {
  for (int j = 0; j <= jmax; ++j) {
    const HermiteFunction h(j);
    for (int s = 0; s < 16; ++s) {
      const double k = -7.5 + s;
      const QuadResult q = integrate(
          [&](double x) {
            return h.value(x) * std::exp(Complex(0.0, -k * x));
          },
          -kPairingRadius, kPairingRadius);
      const Complex expect = std::sqrt(2.0 * kPi) * minus_i_pow(j) * h.value(k);
      const double scale = std::max(1.0, std::abs(expect));
      if (std::abs(q.value - expect) > tol * scale) return false;
    }
  }
  return true;
}

QuantumCheckReport check_quantum(QuantumStat kind, double beta, int jmax,
                                 double tol) {
  QuantumCheckReport rep;
  rep.tol = tol;
  const Expression sym = ft_quantum_stat(kind, beta);
  for (int j = 0; j <= jmax; ++j) {
    const HermiteFunction h(j);
    // phi-hat of the Hermite family is again Hermite (eigenrelation).
    const Complex hat_scale = std::sqrt(2.0 * kPi) * minus_i_pow(j);
    Complex direct;
    if (kind == QuantumStat::Fermi) {
      const QuadResult q = integrate(
          [&](double x) {
            const double bx = beta * x;
            const double f = bx > 700.0 ? 0.0 : 1.0 / (std::exp(bx) + 1.0);
            return f * hat_scale * h.value(x);
          },
          -kPairingRadius, kPairingRadius);
      direct = q.value;
    } else {
      // 1/(e^{bx}-1) has a simple pole at 0; fold the axis:
      // Vp int f psi = int_0^inf [f(x)(psi(x) - psi(-x)) - psi(-x)] dx.
      const QuadResult q = integrate(
          [&](double x) -> Complex {
            const double bx = beta * x;
            const double f = bx > 700.0 ? 0.0 : 1.0 / std::expm1(bx);
            const Complex psi_p = hat_scale * h.value(x);
            const Complex psi_m = hat_scale * h.value(-x);
            return f * (psi_p - psi_m) - psi_m;
          },
          1e-14, kPairingRadius);
      direct = q.value;
    }
    const Complex symbolic = pair(sym, h).value;
    const double dev = std::abs(direct - symbolic);
    const double scale = std::max({1.0, std::abs(direct), std::abs(symbolic)});
    const bool pass = dev <= tol * scale;
    rep.rows.push_back({j, direct, symbolic, dev, pass});
    rep.all_pass = rep.all_pass && pass;
  }
  return rep;
}

double quantum_step_deviation(double beta, int j) {
  const HermiteFunction h(j);
  const Expression limit =
      kPi * delta() + Complex(0.0, 1.0) * vp_recip();  // F H(-x)
  const Complex a = pair(ft_quantum_stat(QuantumStat::Fermi, beta), h).value;
  const Complex b = pair(limit, h).value;
  return std::abs(a - b);
}

}  // namespace distcalc
