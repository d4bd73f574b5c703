#pragma once

#include <complex>

#include "distcalc/errors.hpp"

namespace distcalc {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

// Polar form with the argument pinned to the branch used throughout:
// phi in [-pi, pi), so negative reals carry phi = -pi.
struct BranchArg {
  double r;
  double phi;
};

// Decompose z = r e^{i phi} with phi in [-pi, pi).  DomainError on z = 0.
BranchArg branch_arg(Complex z);

// log z = log r + i phi on the branch above.  log(-1) = -i pi, log i = i pi/2.
Complex branch_log(Complex z);

// z^a = exp(a log z) on the branch; sqrt(-1) = -i, i^a = e^{i a pi/2}.
// Every power and logarithm in the library routes through these two
// functions; host-library pow/log defaults are never used on complex
// arguments.
Complex branch_pow(Complex z, Complex a);

// Gamma function on C minus the non-positive integers (Lanczos
// approximation plus the reflection formula for Re x < 1/2; relative
// error <= 1e-12 for |x| <= 30).  PoleError within 1e-12 of a pole.
Complex gamma(Complex x);

// k!! with the convention (-1)!! = 0!! = 1.  DomainError for k < -1.
long long double_factorial(long long k);

// Harmonic number H_n = sum_{i=1..n} 1/i, H_0 = 0.
double harmonic_number(int n);

// True when x is within tol of an integer (rule-dispatch tolerance).
bool near_int(double x, double tol = 1e-9);

}  // namespace distcalc
