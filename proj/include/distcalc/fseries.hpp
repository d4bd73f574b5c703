#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "distcalc/scalar.hpp"

namespace distcalc {

// Truncated Fourier series sum c_n e^{inx} on period 2 pi.
struct PeriodicSeries {
  std::map<int, Complex> coeffs;  // n in [-order, order]
  int order = 0;
  bool real_valued = false;  // tags c_{-n} = conj(c_n)
};

// Coefficients after applying d^a/dx^a termwise: c_n (in)^a for n != 0,
// plus the aperiodic companion c_0 x^{-a}/Gamma(1-a) when a <= 0.
struct FracSeries {
  std::map<int, Complex> coeffs;
  struct Aperiodic {
    Complex coeff;
    double exponent;  // -alpha
  };
  std::optional<Aperiodic> aperiodic;
  double alpha = 0.0;
};

// Termwise (in)^alpha under the branch: |n|^a e^{+i a pi/2} for n > 0,
// |n|^a e^{-i a pi/2} for n < 0.  c_0 is dropped for alpha > 0 and
// routed to the aperiodic term for alpha <= 0.
FracSeries series_frac(double alpha, const PeriodicSeries& s);

// Abel-damped evaluation: sum over stored n of c e^{inx} e^{-eps|n|},
// terms paired (+n, -n) in ascending |n| with compensated summation,
// plus the aperiodic term evaluated under the branch (complex for
// x < 0).  eps = 0 gives the plain truncated sum.
Complex abel_eval(const FracSeries& fs, double x, double eps);

// Values for a decreasing eps schedule plus a linear-in-eps
// extrapolation of the last two entries; reported as a trend, not as a
// claimed exact limit.
struct AbelTrend {
  std::vector<double> eps;
  std::vector<Complex> values;
  Complex extrapolated;
};
AbelTrend abel_trend(const FracSeries& fs, double x,
                     const std::vector<double>& eps_schedule = {1e-1, 1e-2,
                                                                1e-3});

// CSV rows "x,re,im" (17 significant digits) in grid order, preceded by
// one '#' metadata line recording alpha, order and eps.
void sample(const FracSeries& fs, const std::vector<double>& grid, double eps,
            std::ostream& out);

// f(x) = x on (-pi, pi), periodically continued: c_n = (-1)^{n-1}/(in).
PeriodicSeries sawtooth_series(int order);
// g(x) = |x| on (-pi, pi): c_0 = pi/2, c_k = c_{-k} = -2/(pi k^2), k odd.
PeriodicSeries triangle_series(int order);

// Coefficient CSV "n,re,im" (optional header line).
PeriodicSeries read_series_csv(std::istream& in);

}  // namespace distcalc
