#include "distcalc/partial_fractions.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace distcalc {

Complex poly_eval(const std::vector<Complex>& coeffs, Complex x) {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

namespace {

std::vector<Complex> trim(std::vector<Complex> p) {
  double maxmag = 0.0;
  for (const auto& c : p) maxmag = std::max(maxmag, std::abs(c));
  while (!p.empty() && std::abs(p.back()) <= 1e-14 * maxmag) p.pop_back();
  return p;
}

std::vector<Complex> derive(const std::vector<Complex>& p) {
  std::vector<Complex> d(p.size() > 1 ? p.size() - 1 : 0);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = static_cast<double>(i) * p[i];
  return d;
}

// num = quot * den + rem with deg rem < deg den.
void divmod(std::vector<Complex> num, const std::vector<Complex>& den,
            std::vector<Complex>& quot, std::vector<Complex>& rem) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  quot.assign(std::max(0, dn - dd + 1), 0.0);
  for (int k = dn - dd; k >= 0; --k) {
    const Complex q = num[k + dd] / den[dd];
    quot[k] = q;
    for (int j = 0; j <= dd; ++j) num[k + j] -= q * den[j];
  }
  num.resize(dd > 0 ? dd : 1);
  rem = std::move(num);
}

// Taylor coefficients of p around c (repeated synthetic division by
// x - c; the remainders are the coefficients, lowest order first).
std::vector<Complex> taylor_shift(std::vector<Complex> p, Complex c) {
  const int n = static_cast<int>(p.size());
  std::vector<Complex> out(n, 0.0);
  std::vector<Complex> cur = std::move(p);
  for (int t = 0; t < n && !cur.empty(); ++t) {
    const int d = static_cast<int>(cur.size()) - 1;
    if (d == 0) {
      out[t] = cur[0];
      break;
    }
    std::vector<Complex> q(d, 0.0);
    q[d - 1] = cur[d];
    for (int j = d - 1; j >= 1; --j) q[j - 1] = cur[j] + c * q[j];
    out[t] = cur[0] + c * q[0];
    cur = std::move(q);
  }
  return out;
}

std::vector<Complex> roots_companion(const std::vector<Complex>& p) {
  const int d = static_cast<int>(p.size()) - 1;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) a(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) a(i, d - 1) = -p[i] / p[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
  std::vector<Complex> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

struct Cluster {
  Complex z;
  int mult;
};

// An eigensolve scatters a multiplicity-m root over a disc of radius
// ~eps^{1/m}, so a single fixed radius cannot recover multiplicities.
// Clustering runs at an escalating radius and each candidate center is
// polished with multiplicity-aware Newton (z -= m Q/Q'), after which
// the reconstruction check arbitrates.
std::vector<Cluster> cluster_roots(const std::vector<Complex>& roots,
                                   const std::vector<Complex>& den,
                                   double radius) {
  std::vector<Cluster> out;
  std::vector<char> used(roots.size(), 0);
  const std::vector<Complex> dden = derive(den);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Complex center = roots[i];
    int mult = 1;
    used[i] = 1;
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      const double scale = std::max(1.0, std::abs(center));
      if (std::abs(roots[j] - center) <= radius * scale) {
        center = (center * static_cast<double>(mult) + roots[j]) /
                 static_cast<double>(mult + 1);
        ++mult;
        used[j] = 1;
      }
    }
    for (int it = 0; it < 60; ++it) {
      const Complex f = poly_eval(den, center);
      const Complex df = poly_eval(dden, center);
      if (std::abs(df) == 0.0) break;
      const Complex step = static_cast<double>(mult) * f / df;
      center -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(center))) break;
    }
    const double scale = std::max(1.0, std::abs(center));
    if (std::abs(center.imag()) <= 1e-9 * scale)
      center = Complex(center.real(), 0.0);
    if (std::abs(center.real()) <= 1e-9 * scale)
      center = Complex(0.0, center.imag());
    // Polished coordinates sitting a few ulp off an integer are noise
    // from the expanded-coefficient arithmetic.
    auto snap = [](double v) {
      return std::abs(v - std::round(v)) <= 1e-12 * std::max(1.0, std::abs(v))
                 ? std::round(v)
                 : v;
    };
    center = Complex(snap(center.real()), snap(center.imag()));
    out.push_back({center, mult});
  }
  return out;
}

bool residues_and_check(const std::vector<Complex>& num,
                        const std::vector<Complex>& den,
                        const std::vector<Complex>& rem,
                        const std::vector<Complex>& quot,
                        const std::vector<Cluster>& clusters,
                        PartialFractions& out) {
  out.poly = quot;
  out.poles.clear();
  for (const auto& cl : clusters) {
    PoleGroup pg{cl.z, cl.mult, {}};
    std::vector<Complex> b = den;
    for (int k = 0; k < cl.mult; ++k) {
      std::vector<Complex> q(b.size() - 1, 0.0);
      Complex carry = 0.0;
      for (int j = static_cast<int>(b.size()) - 1; j >= 1; --j) {
        carry = b[j] + carry * cl.z;
        q[j - 1] = carry;
      }
      b = std::move(q);
    }
    const std::vector<Complex> rs = taylor_shift(rem, cl.z);
    const std::vector<Complex> bs = taylor_shift(b, cl.z);
    if (bs.empty() || std::abs(bs[0]) == 0.0) return false;
    std::vector<Complex> s(cl.mult, 0.0);
    for (int t = 0; t < cl.mult; ++t) {
      Complex acc = t < static_cast<int>(rs.size()) ? rs[t] : Complex(0.0);
      for (int u = 0; u < t; ++u)
        acc -= s[u] * (t - u < static_cast<int>(bs.size()) ? bs[t - u]
                                                           : Complex(0.0));
      s[t] = acc / bs[0];
    }
    pg.coeffs.assign(cl.mult, 0.0);
    for (int t = 0; t < cl.mult; ++t) pg.coeffs[cl.mult - 1 - t] = s[t];
    out.poles.push_back(std::move(pg));
  }

  // Reconstruction check at sample points away from the poles.
  int checked = 0;
  double t = 0.379;
  int guard = 0;
  while (checked < 16 && ++guard < 400) {
    const Complex x(t, 0.618 * t);
    t += 0.7341;
    bool near_pole = false;
    for (const auto& pg : out.poles)
      if (std::abs(x - pg.z) < 0.1) near_pole = true;
    if (near_pole) continue;
    const Complex direct = poly_eval(num, x) / poly_eval(den, x);
    Complex recon = poly_eval(out.poly, x);
    for (const auto& pg : out.poles) {
      Complex dx_pow = 1.0;
      for (int j = 1; j <= pg.mult; ++j) {
        dx_pow *= (x - pg.z);
        recon += pg.coeffs[j - 1] / dx_pow;
      }
    }
    if (std::abs(direct - recon) > 1e-8 * (1.0 + std::abs(direct)))
      return false;
    ++checked;
  }
  return checked == 16;
}

}  // namespace

PartialFractions partial_fractions(const RationalSpec& r, double cluster_tol) {
  std::vector<Complex> num = trim(r.num);
  std::vector<Complex> den = trim(r.den);
  if (den.empty()) throw DomainError("partial_fractions: zero denominator");
  if (num.empty()) num = {Complex(0.0)};

  PartialFractions out;
  if (den.size() == 1) {
    out.poly.resize(num.size());
    for (size_t i = 0; i < num.size(); ++i) out.poly[i] = num[i] / den[0];
    return out;
  }
  std::vector<Complex> quot, rem;
  divmod(num, den, quot, rem);
  rem = trim(rem);
  quot = trim(quot);
  if (rem.empty()) {
    out.poly = quot;
    return out;
  }

  const std::vector<Complex> roots = roots_companion(den);
  for (const double radius : {cluster_tol, 1e3 * cluster_tol, 1e-4}) {
    std::vector<Cluster> clusters = cluster_roots(roots, den, radius);
    std::sort(clusters.begin(), clusters.end(),
              [](const Cluster& a, const Cluster& b) {
                return a.z.real() != b.z.real() ? a.z.real() < b.z.real()
                                                : a.z.imag() < b.z.imag();
              });
    if (residues_and_check(num, den, rem, quot, clusters, out)) return out;
  }
  throw IllConditioned(
      "partial_fractions: pole clustering is ambiguous at the working "
      "tolerance");
}

}  // namespace distcalc
