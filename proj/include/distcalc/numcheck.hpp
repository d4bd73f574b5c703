#pragma once

#include <functional>
#include <vector>

#include "distcalc/expression.hpp"
#include "distcalc/fourier.hpp"

namespace distcalc {

/* Hermite function h_j(x) = H_j(x) e^{-x^2/2} (physicists' H_j) with a
   closed-form derivative evaluator: h_j^(r) = P_{j,r}(x) e^{-x^2/2}
   where P_{j,0} = H_j and P_{j,r+1} = P'_{j,r} - x P_{j,r}.  The family
   is the sole test-function set of the oracle: its Fourier transform is
   the eigenrelation  F h_j = sqrt(2 pi) (-i)^j h_j,  so the defining
   identity <F T, h_j> = <T, h_j-hat> is checkable without a second
   numerical transform. */
class HermiteFunction {
 public:
  explicit HermiteFunction(int index, int max_deriv = 10);
  double value(double x) const;
  double derivative(double x, int order) const;
  int index() const { return index_; }
  int max_deriv() const { return static_cast<int>(poly_.size()) - 1; }

 private:
  int index_;
  std::vector<std::vector<double>> poly_;  // poly_[r] = coeffs of P_{j,r}
};

struct QuadResult {
  Complex value;
  double est_error = 0.0;
  int subdivisions = 0;
};

// Adaptive Gauss-Kronrod 7-15 with interval bisection.
QuadResult integrate(const std::function<Complex(double)>& f, double a,
                     double b, double tol = 1e-10, int max_segments = 4000);

struct PairingReport {
  Complex value;
  double est_error = 0.0;
  int subdivisions = 0;
};

/* <e, phi> by atom-wise numeric pairing.

   Half-line power atoms use Hadamard finite-part quadrature.  With
   psi(t) = phi(+-t) e^{-+i omega t} e^{-decay t} and K = ceil(-g) - 1:

     g > -1:   plain adaptive quadrature of t^g log^p t psi(t) on (0, 40]
     g <= -1:  split at 1,
               int_0^1 t^g log^p t [psi - T_K psi](t) dt
             + int_1^40 t^g log^p t psi(t) dt
             + sum_{k<=K} psi^(k)(0)/k! * A(g+k, p)
               A(mu, 0) = 1/(mu+1),  A(mu, 1) = -1/(mu+1)^2
               (the mu = -1 term is the -log eps divergence and is
               dropped: that is the finite-part convention at integer
               exponents; see docs/finite_part.md)

   Deltas pair exactly through the derivative evaluator; the sinh/coth
   kernels are Vp-symmetrized around their pole at 0. */
PairingReport pair(const Expression& e, const HermiteFunction& phi);

// Truncation radius: |h_j| < e^{-x^2/2} * poly, so the tail beyond 40
// is far below every tolerance in use.
inline constexpr double kPairingRadius = 40.0;

struct FtCheckRow {
  int j;
  Complex lhs;  // <ft(e), h_j>
  Complex rhs;  // sqrt(2 pi) (-i)^j <e, h_j>
  double deviation;
  bool pass;
};
struct FtCheckReport {
  std::vector<FtCheckRow> rows;
  bool all_pass = true;
  double tol;
};

// Verifies <ft(e), h_j> = sqrt(2 pi) (-i)^j <e, h_j> for j <= jmax at
// tol relative to max(1, |lhs|, |rhs|).
FtCheckReport check_ft(const Expression& e, int jmax, double tol = 1e-6);

// Gate for every oracle run: quadrature of int h_j(x) e^{-ikx} dx at
// sample points k against sqrt(2 pi) (-i)^j h_j(k).
bool hermite_eigenrelation_gate(int jmax = 8, double tol = 1e-9);

struct QuantumCheckRow {
  int j;
  Complex direct;    // int f(x) h_j-hat(x) dx by quadrature
  Complex symbolic;  // <ft_quantum_stat(...), h_j>
  double deviation;
  bool pass;
};
struct QuantumCheckReport {
  std::vector<QuantumCheckRow> rows;
  bool all_pass = true;
  double tol;
};

// Compares two independent quadratures of the quantum-statistics
// transforms (direct defining integral vs the closed-form result).
QuantumCheckReport check_quantum(QuantumStat kind, double beta, int jmax,
                                 double tol = 1e-5);

// |<ft_quantum_stat(fermi, beta), h_j> - <pi delta + i Vp 1/x, h_j>|:
// the deviation from the step-function transform, which must shrink
// monotonically as beta grows.
double quantum_step_deviation(double beta, int j);

}  // namespace distcalc
