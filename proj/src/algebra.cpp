#include "distcalc/algebra.hpp"

#include <cmath>

#include "distcalc/builders.hpp"

namespace distcalc {

namespace {

constexpr double kDispatchTol = 1e-9;

// x^alpha * delta^(n) for alpha < n, the heuristic case: the defining
// identity routes through the forward transform of Pf x^{n-alpha},
//   x^alpha delta^(n) = i^{-(n+alpha)} (Gamma(n+1)/Gamma(n-alpha+1))
//                       (1/2pi) F[Pf x^{n-alpha}],
// expanded here in closed form so the atom algebra stays independent of
// the Fourier module.  For integer n-alpha this collapses to
// (-1)^alpha (n!/(n-alpha)!) delta^(n-alpha), e.g. x*delta'' = -2 delta'.
Expression mul_delta_below(double alpha, int n) {
  const double beta = static_cast<double>(n) - alpha;
  const Complex front = branch_pow(Complex(0.0, 1.0),
                                   -(static_cast<double>(n) + alpha));
  if (near_int(beta, kDispatchTol)) {
    const auto b = static_cast<int>(std::llround(beta));
    // i^{-(n+alpha)} i^b n!/b! with alpha integer reduces to (-1)^alpha.
    const Complex c = front * branch_pow(Complex(0.0, 1.0), beta) *
                      (gamma(Complex(n + 1)) / gamma(Complex(b + 1)));
    return c * delta(b);
  }
  // F[Pf x^beta] = Gamma(beta+1) [Pf(ix)^{-beta-1}
  //                               + e^{-i pi beta} Pf(-ix)^{-beta-1}];
  // the Gamma(beta+1) cancels against Gamma(n-alpha+1).
  Expression f = pf_ix_power(1, -beta - 1.0) +
                 branch_pow(-1.0, beta) * pf_ix_power(-1, -beta - 1.0);
  const Complex c = front * gamma(Complex(n + 1)) / (2.0 * kPi);
  return c * f;
}

}  // namespace

Expression mul_monomial(double alpha, const Expression& e) {
  Expression out;
  const Complex neg_phase = branch_pow(-1.0, alpha);
  for (const auto& t : canonicalize(e).terms) {
    if (const auto* p = std::get_if<PowerLog>(&t.atom)) {
      const Complex c =
          p->side == Side::Negative ? t.coeff * neg_phase : t.coeff;
      out.terms.push_back(
          {c, power_atom(p->side, p->gamma + alpha, p->log_pow, p->omega,
                         p->decay)});
    } else if (const auto* d = std::get_if<DeltaDeriv>(&t.atom)) {
      if (d->shift != 0.0) {
        if (d->order != 0)
          throw UnsupportedAtom(
              "mul_monomial: x^a * delta_a^(n) undefined for shifted "
              "derivatives");
        out += (t.coeff * branch_pow(d->shift, alpha)) * delta(0, d->shift);
      } else if (alpha > d->order + kDispatchTol) {
        // x^alpha delta^(n) = 0 for alpha > n.
      } else if (std::abs(alpha - d->order) <= kDispatchTol) {
        // x^n delta^(n) = (-1)^n n! delta
        const double s = (d->order % 2 == 0) ? 1.0 : -1.0;
        double fact = 1.0;
        for (int i = 2; i <= d->order; ++i) fact *= i;
        out += (t.coeff * s * fact) * delta(0);
      } else {
        out += t.coeff * mul_delta_below(alpha, d->order);
      }
    } else if (std::holds_alternative<Harmonic>(t.atom)) {
      throw UnsupportedAtom("mul_monomial: harmonic atom");
    } else if (std::holds_alternative<RationalPole>(t.atom)) {
      throw UnsupportedAtom("mul_monomial: rational pole atom");
    } else {
      throw UnsupportedAtom("mul_monomial: analytic kernel atom");
    }
  }
  return canonicalize(out);
}

namespace {

// Smooth-factor expansion of g * delta^(m) with g = e^{-i omega x - d x}:
// g delta^(m) = sum_k C(m,k) (-1)^k g^(k)(0) delta^(m-k).
Expression smooth_times_delta(Complex coeff, int m, Complex g_rate) {
  Expression out;
  double binom = 1.0;
  Complex rate_pow = 1.0;
  double sign = 1.0;
  for (int k = 0; k <= m; ++k) {
    out += (coeff * binom * sign * rate_pow) * delta(m - k);
    binom = binom * (m - k) / (k + 1);
    rate_pow *= g_rate;
    sign = -sign;
  }
  return out;
}

// Derivative of a positive-side atom; negative-side atoms go through
// D o reflect = -reflect o D.
Expression derive_power_pos(Complex coeff, const PowerLog& p) {
  Expression out;
  const Complex rate(-p.decay, -p.omega);  // (e^{-i w x - d x})' / (.)
  if (rate != Complex(0.0))
    out.terms.push_back({coeff * rate, p});
  if (p.log_pow == 1)
    out.terms.push_back(
        {coeff, power_atom(p.side, p.gamma - 1.0, 0, p.omega, p.decay)});
  if (p.gamma != 0.0)
    out.terms.push_back(
        {coeff * p.gamma,
         power_atom(p.side, p.gamma - 1.0, p.log_pow, p.omega, p.decay)});
  if (near_int(p.gamma, kDispatchTol)) {
    const auto g = static_cast<int>(std::llround(p.gamma));
    if (g == 0 && p.log_pow == 0) {
      out += coeff * delta(0);  // H'(x), evaluated against the smooth factor
                                // at 0 where it equals 1
    } else if (g < 0 && p.log_pow == 0) {
      // D[Pf x_+^{-m}] = -m Pf x_+^{-m-1} + ((-1)^m/m!) delta^(m); with the
      // drop-log finite-part convention the log-bearing atoms need no
      // delta correction.
      const int m = -g;
      double fact = 1.0;
      for (int i = 2; i <= m; ++i) fact *= i;
      const double s = (m % 2 == 0) ? 1.0 : -1.0;
      out += smooth_times_delta(coeff * s / fact, m, rate);
    }
  }
  return out;
}

Expression derivative_once(const Expression& e) {
  Expression out;
  for (const auto& t : canonicalize(e).terms) {
    if (const auto* p = std::get_if<PowerLog>(&t.atom)) {
      if (p->side == Side::Positive) {
        out += derive_power_pos(t.coeff, *p);
      } else {
        const PowerLog mirror{Side::Positive, p->gamma, p->log_pow, -p->omega,
                              p->decay};
        out += -1.0 * reflect(derive_power_pos(t.coeff, mirror));
      }
    } else if (const auto* d = std::get_if<DeltaDeriv>(&t.atom)) {
      out += t.coeff * delta(d->order + 1, d->shift);
    } else if (const auto* h = std::get_if<Harmonic>(&t.atom)) {
      out += (t.coeff * Complex(0.0, h->freq)) * Expression(1.0, t.atom);
    } else if (const auto* r = std::get_if<RationalPole>(&t.atom)) {
      out.terms.push_back({t.coeff * static_cast<double>(-r->mult),
                           pole_atom(r->pole, r->mult + 1)});
    } else {
      throw UnsupportedAtom(
          "derivative: analytic kernels carry no symbolic rules");
    }
  }
  return canonicalize(out);
}

}  // namespace

Expression derivative(const Expression& e, int n) {
  if (n < 1) throw DomainError("derivative: order must be >= 1");
  Expression cur = e;
  for (int i = 0; i < n; ++i) cur = derivative_once(cur);
  return cur;
}

}  // namespace distcalc
