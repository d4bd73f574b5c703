#pragma once

#include <variant>
#include <vector>

#include "distcalc/scalar.hpp"

namespace distcalc {

enum class Side { Positive, Negative };
enum class KernelKind { FermiSinh, BoseCoth };

/* The atom basis.  Every distribution handled symbolically is a finite
   linear combination of these five primitives:

     PowerLog       Pf[ H(+-x) |x|^gamma (log|x|)^log_pow e^{-i omega x}
                        e^{-decay |x|} ]
     DeltaDeriv     delta_shift^(order)
     Harmonic       e^{i freq x} on the whole line
     RationalPole   Pf (x - pole)^{-mult},  Im(pole) != 0
     AnalyticKernel the sinh / coth quantum-statistics kernels (numeric
                    pairing only; no symbolic rules apply to them)

   Whole-line objects (Vp 1/x, sgn, |x|^g, x^g, log|x|, polynomials) are
   expanded into half-line PowerLog pairs at construction; the renderer
   reassembles the standard combinations for display. */

struct PowerLog {
  Side side = Side::Positive;
  double gamma = 0.0;
  int log_pow = 0;     // 0 or 1
  double omega = 0.0;  // oscillation factor e^{-i omega x}
  double decay = 0.0;  // e^{-decay |x|}; > 0 only for integer gamma >= 0,
                       // log_pow == 0 (keeps the Fourier table closed)
};

struct DeltaDeriv {
  int order = 0;
  double shift = 0.0;
};

struct Harmonic {
  double freq = 0.0;
};

struct RationalPole {
  Complex pole;
  int mult = 1;
};

struct AnalyticKernel {
  KernelKind kind = KernelKind::FermiSinh;
  double beta = 1.0;
};

using Atom =
    std::variant<PowerLog, DeltaDeriv, Harmonic, RationalPole, AnalyticKernel>;

Atom power_atom(Side side, double gamma, int log_pow = 0, double omega = 0.0,
                double decay = 0.0);
Atom delta_atom(int order, double shift = 0.0);
Atom harmonic_atom(double freq);
Atom pole_atom(Complex pole, int mult);
Atom kernel_atom(KernelKind kind, double beta);

// Fixed total order on atoms: variant rank, then field-lexicographic.
bool atom_less(const Atom& a, const Atom& b);
// Same variant with every field within tol (integer fields exact).
bool atom_close(const Atom& a, const Atom& b, double tol = 1e-12);

struct Term {
  Complex coeff;
  Atom atom;
};

struct Expression {
  std::vector<Term> terms;

  Expression() = default;
  explicit Expression(std::vector<Term> t) : terms(std::move(t)) {}
  Expression(Complex c, Atom a) : terms{{c, std::move(a)}} {}

  bool empty() const { return terms.empty(); }

  Expression& operator+=(const Expression& rhs);
  Expression& operator*=(Complex c);
};

Expression operator+(Expression lhs, const Expression& rhs);
Expression operator-(Expression lhs, const Expression& rhs);
Expression operator*(Complex c, Expression e);

// Merge like atoms, prune coefficients below 1e-14 of the largest term,
// and sort by the fixed atom order.  Idempotent.
Expression canonicalize(const Expression& e);

// True iff canonicalize(e1 - e2) has no coefficient exceeding
// tol * max(1, largest input coefficient).
bool equals(const Expression& e1, const Expression& e2, double tol = 1e-10);

// Largest coefficient magnitude after canonicalization (0 for empty).
double max_coeff(const Expression& e);

// x -> -x atom-wise: swaps half-line sides, negates omega and harmonic
// frequencies, delta^(n)_a -> (-1)^n delta^(n)_{-a}.
Expression reflect(const Expression& e);

}  // namespace distcalc
