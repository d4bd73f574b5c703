#include "distcalc/expression.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace distcalc {

Atom power_atom(Side side, double gamma, int log_pow, double omega,
                double decay) {
  if (log_pow < 0 || log_pow > 1)
    throw NotRepresentable("power atom: log power must be 0 or 1");
  if (decay < 0.0) throw DomainError("power atom: negative decay");
  if (decay > 0.0 && (log_pow != 0 || !near_int(gamma) || gamma < -0.5))
    throw NotRepresentable(
        "power atom: decay requires integer gamma >= 0 and no log factor");
  if (!std::isfinite(gamma) || !std::isfinite(omega) || !std::isfinite(decay))
    throw DomainError("power atom: non-finite field");
  return PowerLog{side, gamma, log_pow, omega, decay};
}

Atom delta_atom(int order, double shift) {
  if (order < 0) throw DomainError("delta atom: negative order");
  if (!std::isfinite(shift)) throw DomainError("delta atom: non-finite shift");
  return DeltaDeriv{order, shift};
}

Atom harmonic_atom(double freq) {
  if (!std::isfinite(freq)) throw DomainError("harmonic atom: non-finite");
  return Harmonic{freq};
}

Atom pole_atom(Complex pole, int mult) {
  if (mult < 1) throw DomainError("pole atom: multiplicity < 1");
  if (pole.imag() == 0.0)
    throw NotRepresentable(
        "pole atom: real poles are expanded into half-line atoms");
  return RationalPole{pole, mult};
}

Atom kernel_atom(KernelKind kind, double beta) {
  if (!(beta > 0.0)) throw DomainError("kernel atom: beta must be positive");
  return AnalyticKernel{kind, beta};
}

namespace {

int side_rank(Side s) { return s == Side::Positive ? 0 : 1; }

using Key = std::tuple<int, double, double, double, double, double, double>;

Key atom_key(const Atom& a) {
  if (const auto* p = std::get_if<PowerLog>(&a))
    return {0,
            static_cast<double>(side_rank(p->side)),
            p->gamma,
            static_cast<double>(p->log_pow),
            p->omega,
            p->decay,
            0.0};
  if (const auto* d = std::get_if<DeltaDeriv>(&a))
    return {1, static_cast<double>(d->order), d->shift, 0, 0, 0, 0};
  if (const auto* h = std::get_if<Harmonic>(&a))
    return {2, h->freq, 0, 0, 0, 0, 0};
  if (const auto* r = std::get_if<RationalPole>(&a))
    return {3, r->pole.real(), r->pole.imag(), static_cast<double>(r->mult),
            0, 0, 0};
  const auto& k = std::get<AnalyticKernel>(a);
  return {4, static_cast<double>(k.kind == KernelKind::FermiSinh ? 0 : 1),
          k.beta, 0, 0, 0, 0};
}

}  // namespace

bool atom_less(const Atom& a, const Atom& b) { return atom_key(a) < atom_key(b); }

bool atom_close(const Atom& a, const Atom& b, double tol) {
  if (a.index() != b.index()) return false;
  const Key ka = atom_key(a);
  const Key kb = atom_key(b);
  // Integer-valued key slots (variant rank, side, log power, orders,
  // multiplicities) land on exact values, so a uniform tolerance works.
  const double da[6] = {std::get<1>(ka), std::get<2>(ka), std::get<3>(ka),
                        std::get<4>(ka), std::get<5>(ka), std::get<6>(ka)};
  const double db[6] = {std::get<1>(kb), std::get<2>(kb), std::get<3>(kb),
                        std::get<4>(kb), std::get<5>(kb), std::get<6>(kb)};
  for (int i = 0; i < 6; ++i)
    if (std::abs(da[i] - db[i]) > tol) return false;
  return true;
}

Expression& Expression::operator+=(const Expression& rhs) {
  terms.insert(terms.end(), rhs.terms.begin(), rhs.terms.end());
  return *this;
}

Expression& Expression::operator*=(Complex c) {
  for (auto& t : terms) t.coeff *= c;
  return *this;
}

Expression operator+(Expression lhs, const Expression& rhs) {
  lhs += rhs;
  return lhs;
}

Expression operator-(Expression lhs, const Expression& rhs) {
  Expression neg = rhs;
  neg *= -1.0;
  lhs += neg;
  return lhs;
}

Expression operator*(Complex c, Expression e) {
  e *= c;
  return e;
}

Expression canonicalize(const Expression& e) {
  std::vector<Term> ts = e.terms;
  for (const auto& t : ts) {
    if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()))
      throw DomainError("canonicalize: non-finite coefficient");
  }
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return atom_less(a.atom, b.atom); });
  std::vector<Term> merged;
  for (const auto& t : ts) {
    if (!merged.empty() && atom_close(merged.back().atom, t.atom))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  double maxmag = 0.0;
  for (const auto& t : merged) maxmag = std::max(maxmag, std::abs(t.coeff));
  std::vector<Term> pruned;
  for (const auto& t : merged) {
    if (std::abs(t.coeff) < 1e-14 * maxmag || std::abs(t.coeff) == 0.0)
      continue;
    Complex c = t.coeff;
    // A component below the pipeline's resolution relative to its
    // partner is roundoff from the phase algebra.
    if (c.imag() != 0.0 && std::abs(c.imag()) <= 1e-13 * std::abs(c.real()))
      c = Complex(c.real(), 0.0);
    if (c.real() != 0.0 && std::abs(c.real()) <= 1e-13 * std::abs(c.imag()))
      c = Complex(0.0, c.imag());
    pruned.push_back({c, t.atom});
  }
  return Expression(std::move(pruned));
}

double max_coeff(const Expression& e) {
  double m = 0.0;
  for (const auto& t : canonicalize(e).terms) m = std::max(m, std::abs(t.coeff));
  return m;
}

bool equals(const Expression& e1, const Expression& e2, double tol) {
  const double scale =
      std::max({1.0, max_coeff(e1), max_coeff(e2)});
  const Expression diff = canonicalize(e1 - e2);
  for (const auto& t : diff.terms)
    if (std::abs(t.coeff) > tol * scale) return false;
  return true;
}

Expression reflect(const Expression& e) {
  Expression out;
  out.terms.reserve(e.terms.size());
  for (const auto& t : e.terms) {
    if (const auto* p = std::get_if<PowerLog>(&t.atom)) {
      const Side flipped =
          p->side == Side::Positive ? Side::Negative : Side::Positive;
      out.terms.push_back(
          {t.coeff, PowerLog{flipped, p->gamma, p->log_pow, -p->omega, p->decay}});
    } else if (const auto* d = std::get_if<DeltaDeriv>(&t.atom)) {
      const double sign = (d->order % 2 == 0) ? 1.0 : -1.0;
      out.terms.push_back({sign * t.coeff, DeltaDeriv{d->order, -d->shift}});
    } else if (const auto* h = std::get_if<Harmonic>(&t.atom)) {
      out.terms.push_back({t.coeff, Harmonic{-h->freq}});
    } else if (const auto* r = std::get_if<RationalPole>(&t.atom)) {
      // Pf(-x - z)^{-j} = (-1)^j Pf(x + z)^{-j}
      const double sign = (r->mult % 2 == 0) ? 1.0 : -1.0;
      out.terms.push_back({sign * t.coeff, RationalPole{-r->pole, r->mult}});
    } else {
      // Both quantum-statistics kernels are odd functions.
      const auto& k = std::get<AnalyticKernel>(t.atom);
      out.terms.push_back({-t.coeff, AnalyticKernel{k.kind, k.beta}});
    }
  }
  return out;
}

}  // namespace distcalc
