#include "distcalc/fracderiv.hpp"

#include <cmath>

#include "distcalc/algebra.hpp"
#include "distcalc/builders.hpp"
#include "distcalc/fourier.hpp"

namespace distcalc {

Expression frac_d(FracOrder order, const Expression& e) {
  const double a = order.alpha;
  if (!std::isfinite(a)) throw DomainError("frac_d: non-finite order");
  if (a == 0.0) return canonicalize(e);
  const Complex phase = branch_pow(Complex(0.0, 1.0), a);
  return ift(phase * mul_monomial(a, ft(e)));
}

Expression closed_form_power(double alpha, int n) {
  if (n >= 0) {
    if (alpha > n + 1e-9) return Expression{};
    const Complex c = gamma(Complex(n + 1)) / gamma(Complex(n - alpha + 1.0));
    return c * pf_power(n - alpha);
  }
  const int m = -n;
  double fact = 1.0;
  for (int i = 2; i < m; ++i) fact *= i;  // (m-1)!
  if (near_int(alpha)) {
    const auto ai = static_cast<int>(std::llround(alpha));
    if (m + ai >= 1) {
      const double sign = (ai % 2 == 0) ? 1.0 : -1.0;
      const Complex c = sign * gamma(Complex(m + ai)) / gamma(Complex(m));
      return c * pf_power(-(m + ai));
    }
    const int k = -m - ai;
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const Complex c = sign / (fact * kfact);
    std::vector<Complex> xk(k + 1, 0.0);
    xk[k] = 1.0;
    Expression e = (c * (harmonic_number(k) - kEulerGamma)) * polynomial(xk);
    Expression lg;
    lg.terms.push_back({1.0, power_atom(Side::Positive, k, 1)});
    lg.terms.push_back({(k % 2 == 0) ? 1.0 : -1.0,
                        power_atom(Side::Negative, k, 1)});
    e += (-c) * lg;
    return canonicalize(e);
  }
  if (m + alpha < 0.0 && near_int(m + alpha))
    throw DomainError("closed_form_power: Gamma pole at m + alpha");
  const Complex c = branch_pow(Complex(0.0, 1.0), alpha - m) *
                    gamma(Complex(m + alpha)) / (2.0 * gamma(Complex(m)));
  const double s = (m % 2 == 0) ? 1.0 : -1.0;  // -(-1)^{m+1} = (-1)^m
  Expression e = pf_ix_power(-1, -m - alpha) +
                 (s * branch_pow(-1.0, alpha)) * pf_ix_power(1, -m - alpha);
  return canonicalize(c * e);
}

SemigroupReport check_semigroup(double alpha, double beta, const Expression& e,
                                double tol) {
  SemigroupReport rep;
  rep.tol = tol;
  rep.order_dependent = alpha * beta < 0.0;
  if (rep.order_dependent)
    rep.note = "mixed-sign orders: composition is order-dependent";
  rep.lhs = frac_d(alpha, frac_d(beta, e));
  rep.rhs = frac_d(alpha + beta, e);
  rep.equal = equals(rep.lhs, rep.rhs, tol);
  return rep;
}

std::pair<Expression, Expression> noncommutativity_demo() {
  const Expression h = heaviside(1);
  return {frac_d(1.0, frac_d(-1.0, h)), frac_d(-1.0, frac_d(1.0, h))};
}

}  // namespace distcalc
