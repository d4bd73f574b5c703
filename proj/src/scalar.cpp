#include "distcalc/scalar.hpp"

#include <cmath>
#include <cstdlib>

namespace distcalc {

BranchArg branch_arg(Complex z) {
  const double r = std::abs(z);
  if (r == 0.0) throw DomainError("branch_arg: argument is zero");
  double phi = std::atan2(z.imag(), z.real());
  // atan2 returns +pi for negative reals; the seam sits at -pi inclusive.
  if (phi >= kPi) phi -= 2.0 * kPi;
  return {r, phi};
}

Complex branch_log(Complex z) {
  const BranchArg p = branch_arg(z);
  return {std::log(p.r), p.phi};
}

static Complex int_pow(Complex z, long long n) {
  if (n < 0) return 1.0 / int_pow(z, -n);
  Complex acc = 1.0;
  Complex base = z;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Complex branch_pow(Complex z, Complex a) {
  if (a == Complex(0.0)) {
    if (z == Complex(0.0)) throw DomainError("branch_pow: 0^0");
    return 1.0;
  }
  if (z == Complex(0.0)) throw DomainError("branch_pow: zero base");
  // Integer exponents reduce to repeated multiplication; this keeps values
  // like (-1)^2 exact instead of picking up exp/log roundoff.
  if (a.imag() == 0.0 && near_int(a.real(), 1e-13) && std::abs(a.real()) <= 64.0)
    return int_pow(z, std::llround(a.real()));
  return std::exp(a * branch_log(z));
}

// Lanczos coefficients, g = 7, n = 9.
static const double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

static Complex gamma_lanczos(Complex x) {
  // Requires Re x >= 1/2.
  x -= 1.0;
  Complex a = kLanczos[0];
  const Complex t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + static_cast<double>(i));
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

Complex gamma(Complex x) {
  if (x.imag() == 0.0 && x.real() <= 0.5) {
    const double r = x.real();
    if (std::abs(r - std::round(r)) < 1e-12 && r < 0.5)
      throw PoleError("gamma: pole at non-positive integer");
  }
  if (x.real() < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    const Complex s = std::sin(kPi * x);
    if (s == Complex(0.0)) throw PoleError("gamma: pole");
    return kPi / (s * gamma_lanczos(1.0 - x));
  }
  return gamma_lanczos(x);
}

long long double_factorial(long long k) {
  if (k < -1) throw DomainError("double_factorial: k < -1");
  long long acc = 1;
  for (long long v = k; v > 1; v -= 2) acc *= v;
  return acc;
}

double harmonic_number(int n) {
  double h = 0.0;
  for (int i = 1; i <= n; ++i) h += 1.0 / i;
  return h;
}

bool near_int(double x, double tol) {
  return std::abs(x - std::round(x)) <= tol;
}

}  // namespace distcalc
