#include <cmath>

#include "distcalc/numcheck.hpp"

namespace distcalc {

namespace {

// Smooth companion factor of a half-line atom: psi(t) = phi(s t)
// e^{-i s omega t} e^{-decay t} on t > 0, with s = +-1 the side.
struct SmoothPart {
  const HermiteFunction* phi;
  double s;
  Complex rate;  // -(i s omega + decay)

  Complex value(double t) const {
    return phi->value(s * t) * std::exp(rate * t);
  }
  // psi^(k)(0) = sum_j C(k,j) s^j phi^(j)(0) rate^{k-j}.
  Complex deriv0(int k) const {
    Complex acc = 0.0;
    double binom = 1.0;
    std::vector<Complex> rate_pows(k + 1);
    rate_pows[0] = 1.0;
    for (int i = 1; i <= k; ++i) rate_pows[i] = rate_pows[i - 1] * rate;
    for (int j = 0; j <= k; ++j) {
      const double sj = (j % 2 == 0 || s > 0) ? 1.0 : -1.0;
      acc += binom * sj * phi->derivative(0.0, j) * rate_pows[k - j];
      binom = binom * (k - j) / (j + 1);
    }
    return acc;
  }
};

double pow_int_d(double x, int n) {
  double acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= x;
  return acc;
}

Complex pow_int_c(Complex x, int n) {
  if (n < 0) return 1.0 / pow_int_c(x, -n);
  Complex acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= x;
  return acc;
}

// Finite-part pairing of one half-line power-log atom.
PairingReport pair_power(const PowerLog& p, const HermiteFunction& phi) {
  const double s = p.side == Side::Positive ? 1.0 : -1.0;
  const SmoothPart psi{&phi, s, Complex(-p.decay, -s * p.omega)};
  const double g = p.gamma;
  const int lp = p.log_pow;

  PairingReport rep;
  const double R = kPairingRadius;

  if (g > -1.0 + 1e-12) {
    // Integrable singularity at most; u^4 substitution flattens it.
    auto inner = [&](double u) {
      const double t = u * u * u * u;
      const double lg = lp ? 4.0 * std::log(u) : 1.0;
      return 4.0 * std::pow(u, 4.0 * g + 3.0) * lg * psi.value(t);
    };
    const QuadResult q1 = integrate(inner, 0.0, 1.0);
    auto outer = [&](double t) {
      const double lg = lp ? std::log(t) : 1.0;
      return std::pow(t, g) * lg * psi.value(t);
    };
    const QuadResult q2 = integrate(outer, 1.0, R);
    rep.value = q1.value + q2.value;
    rep.est_error = q1.est_error + q2.est_error;
    rep.subdivisions = q1.subdivisions + q2.subdivisions;
    return rep;
  }

  const int K = static_cast<int>(std::ceil(-g)) - 1;
  if (K + 1 > phi.max_deriv())
    throw QuadratureFailure(
        "pair: exponent too singular for the derivative evaluator");

  std::vector<Complex> d0(phi.max_deriv() + 1);
  std::vector<double> inv_fact(phi.max_deriv() + 1, 1.0);
  for (size_t k = 1; k < d0.size(); ++k)
    inv_fact[k] = inv_fact[k - 1] / static_cast<double>(k);
  for (size_t k = 0; k < d0.size(); ++k) d0[k] = psi.deriv0(static_cast<int>(k));

  // R(t) = (psi - T_K psi)(t) / t^{K+1}: Taylor tail below the switch
  // point (direct evaluation there is cancellation noise), direct above.
  const double t_switch = 0.15;
  auto remainder = [&](double t) -> Complex {
    if (t <= t_switch) {
      Complex acc = 0.0;
      double tp = 1.0;
      for (int k = K + 1; k < static_cast<int>(d0.size()); ++k) {
        acc += d0[k] * inv_fact[k] * tp;
        tp *= t;
      }
      return acc;
    }
    Complex taylor = 0.0;
    double tp = 1.0;
    for (int k = 0; k <= K; ++k) {
      taylor += d0[k] * inv_fact[k] * tp;
      tp *= t;
    }
    return (psi.value(t) - taylor) / pow_int_d(t, K + 1);
  };

  auto inner = [&](double u) {
    const double t = u * u * u * u;
    const double lg = lp ? 4.0 * std::log(u) : 1.0;
    return 4.0 * std::pow(u, 4.0 * (g + K + 1.0) + 3.0) * lg * remainder(t);
  };
  const QuadResult q1 = integrate(inner, 0.0, 1.0);
  auto outer = [&](double t) {
    const double lg = lp ? std::log(t) : 1.0;
    return std::pow(t, g) * lg * psi.value(t);
  };
  const QuadResult q2 = integrate(outer, 1.0, R);

  // Analytic finite-part terms of the Taylor polynomial on (0, 1]:
  //   f.p. int_0^1 t^{g+k} dt       = 1/(g+k+1)
  //   f.p. int_0^1 t^{g+k} log t dt = -1/(g+k+1)^2
  // At g+k = -1 the primitive is log eps (resp. log^2 eps/2): pure
  // divergence, discarded by the finite-part definition.
  Complex analytic = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double mu = g + k;
    if (std::abs(mu + 1.0) < 1e-9) continue;
    const double a = lp ? -1.0 / ((mu + 1.0) * (mu + 1.0)) : 1.0 / (mu + 1.0);
    analytic += d0[k] * inv_fact[k] * a;
  }

  rep.value = q1.value + q2.value + analytic;
  rep.est_error = q1.est_error + q2.est_error;
  rep.subdivisions = q1.subdivisions + q2.subdivisions;
  return rep;
}

PairingReport pair_kernel(const AnalyticKernel& k, const HermiteFunction& phi) {
  const double beta = k.beta;
  auto kernel = [&](double x) -> Complex {
    if (k.kind == KernelKind::FermiSinh)
      return Complex(0.0, kPi / beta) / std::sinh(kPi * x / beta);
    return Complex(0.0, -kPi / beta) / std::tanh(kPi * x / beta);
  };
  // Both kernels are odd with a simple pole at 0: Vp-symmetrize.
  auto f = [&](double x) -> Complex {
    return kernel(x) * (phi.value(x) - phi.value(-x));
  };
  const QuadResult q = integrate(f, 1e-14, kPairingRadius);
  return {q.value, q.est_error, q.subdivisions};
}

}  // namespace

PairingReport pair(const Expression& e, const HermiteFunction& phi) {
  PairingReport total;
  for (const auto& t : canonicalize(e).terms) {
    PairingReport r;
    if (const auto* p = std::get_if<PowerLog>(&t.atom)) {
      r = pair_power(*p, phi);
    } else if (const auto* d = std::get_if<DeltaDeriv>(&t.atom)) {
      const double sign = (d->order % 2 == 0) ? 1.0 : -1.0;
      r.value = sign * phi.derivative(d->shift, d->order);
    } else if (const auto* h = std::get_if<Harmonic>(&t.atom)) {
      const double a = h->freq;
      const QuadResult q = integrate(
          [&](double x) {
            return std::exp(Complex(0.0, a * x)) * phi.value(x);
          },
          -kPairingRadius, kPairingRadius);
      r = {q.value, q.est_error, q.subdivisions};
    } else if (const auto* rp = std::get_if<RationalPole>(&t.atom)) {
      const QuadResult q = integrate(
          [&](double x) {
            return phi.value(x) * pow_int_c(Complex(x, 0.0) - rp->pole,
                                            -rp->mult);
          },
          -kPairingRadius, kPairingRadius);
      r = {q.value, q.est_error, q.subdivisions};
    } else {
      r = pair_kernel(std::get<AnalyticKernel>(t.atom), phi);
    }
    total.value += t.coeff * r.value;
    total.est_error += std::abs(t.coeff) * r.est_error;
    total.subdivisions += r.subdivisions;
  }
  if (total.est_error > 1e-6)
    throw QuadratureFailure("pair: error estimate exceeds 1e-6");
  return total;
}

}  // namespace distcalc
