#include "distcalc/fseries.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>

namespace distcalc {

FracSeries series_frac(double alpha, const PeriodicSeries& s) {
  FracSeries out;
  out.alpha = alpha;
  for (const auto& [n, c] : s.coeffs) {
    if (n == 0) {
      if (c == Complex(0.0)) continue;
      if (alpha <= 0.0)
        out.aperiodic = FracSeries::Aperiodic{
            c / gamma(Complex(1.0 - alpha)), -alpha};
      // alpha > 0: d^a 1 = 0, the term is dropped.
      continue;
    }
    out.coeffs[n] = c * branch_pow(Complex(0.0, n), alpha);
  }
  return out;
}

Complex abel_eval(const FracSeries& fs, double x, double eps) {
  if (eps < 0.0) throw DomainError("abel_eval: eps must be >= 0");
  int maxn = 0;
  for (const auto& [n, c] : fs.coeffs) maxn = std::max(maxn, std::abs(n));
  // Paired (+n, -n) ascending-|n| Kahan summation keeps real-valued
  // inputs real to machine precision.
  Complex sum = 0.0;
  Complex comp = 0.0;
  auto add = [&](Complex v) {
    const Complex y = v - comp;
    const Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  for (int n = 1; n <= maxn; ++n) {
    const double damp = std::exp(-eps * n);
    if (auto it = fs.coeffs.find(n); it != fs.coeffs.end())
      add(it->second * damp * std::exp(Complex(0.0, n * x)));
    if (auto it = fs.coeffs.find(-n); it != fs.coeffs.end())
      add(it->second * damp * std::exp(Complex(0.0, -n * x)));
  }
  if (fs.aperiodic) {
    const auto& ap = *fs.aperiodic;
    if (x == 0.0)
      add(ap.exponent == 0.0 ? ap.coeff : Complex(0.0));
    else
      add(ap.coeff * branch_pow(x, ap.exponent));
  }
  return sum;
}

AbelTrend abel_trend(const FracSeries& fs, double x,
                     const std::vector<double>& eps_schedule) {
  AbelTrend t;
  t.eps = eps_schedule;
  for (double e : eps_schedule) t.values.push_back(abel_eval(fs, x, e));
  const size_t n = t.values.size();
  if (n >= 2) {
    const double e1 = t.eps[n - 2], e2 = t.eps[n - 1];
    t.extrapolated =
        t.values[n - 1] +
        (t.values[n - 1] - t.values[n - 2]) * (e2 / (e1 - e2));
  } else if (n == 1) {
    t.extrapolated = t.values[0];
  }
  return t;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace

void sample(const FracSeries& fs, const std::vector<double>& grid, double eps,
            std::ostream& out) {
  if (grid.empty()) throw DomainError("sample: empty grid");
  int maxn = 0;
  for (const auto& [n, c] : fs.coeffs) maxn = std::max(maxn, std::abs(n));
  out << "# alpha=" << fmt17(fs.alpha) << " order=" << maxn
      << " eps=" << fmt17(eps) << "\n";
  out << "x,re,im\n";
  for (double x : grid) {
    const Complex v = abel_eval(fs, x, eps);
    out << fmt17(x) << ',' << fmt17(v.real()) << ',' << fmt17(v.imag())
        << "\n";
  }
}

PeriodicSeries sawtooth_series(int order) {
  PeriodicSeries s;
  s.order = order;
  s.real_valued = true;
  for (int n = -order; n <= order; ++n) {
    if (n == 0) continue;
    const double sign = ((n - 1) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{n-1}
    s.coeffs[n] = sign / Complex(0.0, n);
  }
  return s;
}

PeriodicSeries triangle_series(int order) {
  PeriodicSeries s;
  s.order = order;
  s.real_valued = true;
  s.coeffs[0] = kPi / 2.0;
  for (int k = 1; k <= order; k += 2) {
    const Complex c = -2.0 / (kPi * k * k);
    s.coeffs[k] = c;
    s.coeffs[-k] = c;
  }
  return s;
}

PeriodicSeries read_series_csv(std::istream& in) {
  PeriodicSeries s;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (first && line.find_first_not_of("nreim, \t") == std::string::npos) {
      first = false;
      continue;  // header
    }
    first = false;
    std::istringstream row(line);
    std::string field;
    int n = 0;
    double re = 0.0, im = 0.0;
    if (!std::getline(row, field, ',')) continue;
    try {
      n = std::stoi(field);
      if (std::getline(row, field, ',')) re = std::stod(field);
      if (std::getline(row, field, ',')) im = std::stod(field);
    } catch (const std::exception&) {
      throw ParseError("coefficient CSV: malformed row '" + line + "'", 0);
    }
    s.coeffs[n] = Complex(re, im);
    s.order = std::max(s.order, std::abs(n));
  }
  bool real = true;
  for (const auto& [n, c] : s.coeffs) {
    auto it = s.coeffs.find(-n);
    const Complex mirror = it == s.coeffs.end() ? Complex(0.0) : it->second;
    if (std::abs(mirror - std::conj(c)) > 1e-12 * (1.0 + std::abs(c)))
      real = false;
  }
  s.real_valued = real;
  return s;
}

}  // namespace distcalc
