#include "distcalc/fourier.hpp"

#include <cmath>
#include <map>

#include "distcalc/builders.hpp"

namespace distcalc {

namespace {

constexpr double kDispatchTol = 1e-9;

const Complex kI(0.0, 1.0);

Complex ipow(double a) { return branch_pow(kI, a); }

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// x^k as a whole-line pair.
Expression poly_x(int k) {
  std::vector<Complex> c(k + 1, 0.0);
  c[k] = 1.0;
  return polynomial(c);
}

// x^k sgn(x).
Expression sgn_times_power(int k) {
  Expression e;
  e.terms.push_back({1.0, power_atom(Side::Positive, k)});
  e.terms.push_back({(k % 2 == 0) ? -1.0 : 1.0,
                     power_atom(Side::Negative, k)});
  return e;
}

// Pf sgn(x)/x^m = H(x) x^{-m} + (-1)^{m+1} H(-x)|x|^{-m}.
Expression pf_sgn_recip_power(int m) {
  Expression e;
  e.terms.push_back({1.0, power_atom(Side::Positive, -m)});
  e.terms.push_back({(m % 2 == 0) ? -1.0 : 1.0,
                     power_atom(Side::Negative, -m)});
  return e;
}

// x^n log|x| as a whole-line pair of log atoms.
Expression whole_log_power(int n) {
  Expression e;
  e.terms.push_back({1.0, power_atom(Side::Positive, n, 1)});
  e.terms.push_back({(n % 2 == 0) ? 1.0 : -1.0,
                     power_atom(Side::Negative, n, 1)});
  return e;
}

// F[x^n log|x|].
Expression ft_whole_log_power(int n) {
  Expression e = ((harmonic_number(n) - kEulerGamma) * 2.0 * kPi * ipow(n)) *
                 Expression(1.0, delta_atom(n));
  e += (-kPi * factorial(n) * branch_pow(-kI, n)) * pf_sgn_recip_power(n + 1);
  return e;
}

// F[Pf x^{-m}] = pi i^{-m} x^{m-1} sgn(x)/(m-1)!.
Expression ft_pf_neg_int_power(int m) {
  return (kPi * ipow(-m) / factorial(m - 1)) * sgn_times_power(m - 1);
}

// F[Pf sgn(x)/x^m] = 2 (-ix)^{m-1}/(m-1)! [H_{m-1} - g - log|x|].
Expression ft_pf_sgn_recip_power(int m) {
  const int k = m - 1;
  const Complex c = 2.0 * branch_pow(-kI, k) / factorial(k);
  Expression e = (c * (harmonic_number(k) - kEulerGamma)) * poly_x(k);
  e += (-c) * whole_log_power(k);
  return e;
}

// F of a single half-line atom with integer gamma = n >= 0 (no log, no
// oscillation, no decay), positive side.
Expression ft_pos_nonneg_int_power(int n) {
  Expression e = (kPi * ipow(n)) * Expression(1.0, delta_atom(n));
  e += (-branch_pow(kI, n + 1) * std::pow(-1.0, n) * factorial(n)) *
       pf_power(-n - 1.0);
  return e;
}

// F of a single half-line atom with integer gamma = -m < 0, positive side:
// H(x) x^{-m} = (Pf x^{-m} + Pf sgn/x^m) / 2.
Expression ft_pos_neg_int_power(int m) {
  return 0.5 * (ft_pf_neg_int_power(m) + ft_pf_sgn_recip_power(m));
}

Expression ft_power_atom(const PowerLog& p, Complex coeff) {
  if (p.decay > 0.0) {
    // Inverse of the complex-pole rule.
    const auto n = static_cast<int>(std::llround(p.gamma));
    const Complex c = coeff * factorial(n) * ipow(-(n + 1));
    if (p.side == Side::Positive)
      return c * Expression(1.0, pole_atom(Complex(-p.omega, p.decay), n + 1));
    return (c * std::pow(-1.0, n + 1)) *
           Expression(1.0, pole_atom(Complex(-p.omega, -p.decay), n + 1));
  }
  if (p.omega != 0.0)
    throw NotRepresentable(
        "ft: oscillating power atom transforms only in whole-line pairs");
  if (!near_int(p.gamma, kDispatchTol)) {
    const Expression f =
        gamma(Complex(p.gamma + 1.0)) *
        pf_ix_power(p.side == Side::Positive ? 1 : -1, -p.gamma - 1.0);
    return coeff * f;
  }
  const auto n = static_cast<int>(std::llround(p.gamma));
  Expression pos = n >= 0 ? ft_pos_nonneg_int_power(n) : ft_pos_neg_int_power(-n);
  if (p.side == Side::Negative) pos = reflect(pos);
  return coeff * pos;
}

Expression ft_delta_atom(const DeltaDeriv& d, Complex coeff) {
  if (d.shift == 0.0) return (coeff * ipow(d.order)) * poly_x(d.order);
  if (d.order == 0)
    return coeff * Expression(1.0, harmonic_atom(-d.shift));
  Expression e;
  e.terms.push_back({1.0, power_atom(Side::Positive, d.order, 0, d.shift)});
  e.terms.push_back({std::pow(-1.0, d.order),
                     power_atom(Side::Negative, d.order, 0, d.shift)});
  return (coeff * ipow(d.order)) * e;
}

Expression ft_pole_atom(const RationalPole& r, Complex coeff) {
  const int j = r.mult;
  const Complex c = coeff * 2.0 * kPi * ipow(j) / factorial(j - 1);
  if (r.pole.imag() > 0.0)
    return c * Expression(1.0, power_atom(Side::Negative, j - 1, 0,
                                          r.pole.real(), r.pole.imag()));
  return (c * std::pow(-1.0, j)) *
         Expression(1.0, power_atom(Side::Positive, j - 1, 0, r.pole.real(),
                                    -r.pole.imag()));
}

}  // namespace

Expression ft(const Expression& e) {
  const Expression cn = canonicalize(e);
  Expression out;

  // Log-bearing and oscillating power atoms transform only as whole-line
  // pairings; collect them first.
  std::map<int, std::pair<Complex, Complex>> log_groups;       // n -> (c+, c-)
  std::map<std::pair<int, double>, std::pair<Complex, Complex>> osc_groups;
  const double scale = std::max(1.0, max_coeff(cn));

  for (const auto& t : cn.terms) {
    if (const auto* p = std::get_if<PowerLog>(&t.atom)) {
      if (p->log_pow == 1) {
        if (p->decay > 0.0)
          throw NotRepresentable("ft: log atom with decay");
        if (p->omega != 0.0)
          throw NotRepresentable("ft: log atom with oscillation");
        if (!near_int(p->gamma, kDispatchTol) || p->gamma < -0.5)
          throw NotRepresentable(
              "ft: log atoms transform only for integer gamma >= 0");
        const auto n = static_cast<int>(std::llround(p->gamma));
        auto& g = log_groups[n];
        (p->side == Side::Positive ? g.first : g.second) += t.coeff;
        continue;
      }
      if (p->omega != 0.0 && p->decay == 0.0) {
        if (!near_int(p->gamma, kDispatchTol) || p->gamma < -0.5)
          throw NotRepresentable(
              "ft: oscillating atom requires integer gamma >= 0");
        const auto n = static_cast<int>(std::llround(p->gamma));
        auto& g = osc_groups[{n, p->omega}];
        (p->side == Side::Positive ? g.first : g.second) += t.coeff;
        continue;
      }
      out += ft_power_atom(*p, t.coeff);
    } else if (const auto* d = std::get_if<DeltaDeriv>(&t.atom)) {
      out += ft_delta_atom(*d, t.coeff);
    } else if (const auto* h = std::get_if<Harmonic>(&t.atom)) {
      out += (t.coeff * 2.0 * kPi) * Expression(1.0, delta_atom(0, h->freq));
    } else if (const auto* r = std::get_if<RationalPole>(&t.atom)) {
      out += ft_pole_atom(*r, t.coeff);
    } else {
      throw UnsupportedAtom("ft: analytic kernel atom");
    }
  }

  for (const auto& [n, cs] : log_groups) {
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    const Complex w = 0.5 * (cs.first + parity * cs.second);
    const Complex s = 0.5 * (cs.first - parity * cs.second);
    if (std::abs(s) > 1e-12 * scale)
      throw NotRepresentable(
          "ft: odd log combination x^n log|x| sgn(x) is outside the rule "
          "table");
    if (std::abs(w) > 0.0) out += w * ft_whole_log_power(n);
  }
  for (const auto& [key, cs] : osc_groups) {
    const auto [n, omega] = key;
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    const Complex w = 0.5 * (cs.first + parity * cs.second);
    const Complex s = 0.5 * (cs.first - parity * cs.second);
    if (std::abs(s) > 1e-12 * scale)
      throw NotRepresentable(
          "ft: translated sgn-type power atoms are outside the rule table");
    if (std::abs(w) > 0.0)
      out += (w * 2.0 * kPi * ipow(n)) * Expression(1.0, delta_atom(n, -omega));
  }
  return canonicalize(out);
}

Expression ift(const Expression& e) {
  return (1.0 / (2.0 * kPi)) * reflect(ft(e));
}

Expression ft_rational(const RationalSpec& r) {
  const PartialFractions pf = partial_fractions(r);
  Expression out;
  for (size_t k = 0; k < pf.poly.size(); ++k) {
    if (pf.poly[k] == Complex(0.0)) continue;
    out += (pf.poly[k] * 2.0 * kPi * ipow(k)) *
           Expression(1.0, delta_atom(static_cast<int>(k)));
  }
  for (const auto& pg : pf.poles) {
    for (int j = 1; j <= pg.mult; ++j) {
      const Complex a = pg.coeffs[j - 1];
      if (a == Complex(0.0)) continue;
      if (pg.z.imag() != 0.0) {
        out += ft_pole_atom(RationalPole{pg.z, j}, a);
      } else {
        // Real pole: translation of F[Pf x^{-j}].
        const Complex c = a * kPi * ipow(-j) / factorial(j - 1);
        Expression g;
        g.terms.push_back(
            {1.0, power_atom(Side::Positive, j - 1, 0, pg.z.real())});
        g.terms.push_back({std::pow(-1.0, j),
                           power_atom(Side::Negative, j - 1, 0, pg.z.real())});
        out += c * g;
      }
    }
  }
  return canonicalize(out);
}

Expression ft_quantum_stat(QuantumStat kind, double beta) {
  if (!(beta > 0.0)) throw DomainError("ft_quantum_stat: beta must be > 0");
  if (kind == QuantumStat::Fermi) {
    Expression e = kPi * delta();
    e.terms.push_back({1.0, kernel_atom(KernelKind::FermiSinh, beta)});
    return e;
  }
  Expression e = -kPi * delta();
  e.terms.push_back({1.0, kernel_atom(KernelKind::BoseCoth, beta)});
  return e;
}

}  // namespace distcalc
