#include "distcalc/algebra.hpp"

#include "distcalc/builders.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace distcalc;

namespace {
const Complex I(0.0, 1.0);
}

TEST_CASE("x^a delta^(n) case split") {
  // x * delta' = -delta
  CHECK(equals(mul_monomial(1.0, delta(1)), -1.0 * delta(), 1e-12));
  // x^2 * delta' = 0
  CHECK(mul_monomial(2.0, delta(1)).empty());
  // x^2 * delta'' = 2 delta
  CHECK(equals(mul_monomial(2.0, delta(2)), 2.0 * delta(), 1e-12));
  // x * delta'' = -2 delta'
  CHECK(equals(mul_monomial(1.0, delta(2)), -2.0 * delta(1), 1e-12));
  // 1/x * delta = -delta'
  CHECK(equals(mul_monomial(-1.0, delta()), -1.0 * delta(1), 1e-12));
}

TEST_CASE("the Schwartz counterexample is preserved") {
  const Expression lhs = mul_monomial(-1.0, mul_monomial(1.0, delta()));
  const Expression rhs = mul_monomial(1.0, mul_monomial(-1.0, delta()));
  CHECK(lhs.empty());                       // 1/x (x delta) = 0
  CHECK(equals(rhs, delta(), 1e-12));       // (x 1/x) delta = delta
  CHECK_FALSE(equals(lhs, rhs, 1e-10));
}

TEST_CASE("monomial shifts on half-line atoms") {
  // x^{1/2} * H(x) x^{1/2} = H(x) x
  const Expression in(1.0, power_atom(Side::Positive, 0.5));
  const Expression out = mul_monomial(0.5, in);
  REQUIRE(out.terms.size() == 1);
  CHECK(std::get<PowerLog>(out.terms[0].atom).gamma == doctest::Approx(1.0));
  // x * Vp(1/x) = 1 and x^{-1} * Vp(1/x) = Pf x^{-2}
  CHECK(equals(mul_monomial(1.0, vp_recip()), one(), 1e-12));
  CHECK(equals(mul_monomial(-1.0, vp_recip()), pf_power(-2.0), 1e-12));
  // pointwise branch consistency: x^{1/2} x^{-1} = x^{-1/2}
  CHECK(equals(mul_monomial(0.5, vp_recip()), pf_power(-0.5), 1e-12));
}

TEST_CASE("same-sign exponent composition on delta-free expressions") {
  testing::Rng rng;
  for (int i = 0; i < 100; ++i) {
    Expression e;
    const int n = 1 + rng.pick(4);
    for (int k = 0; k < n; ++k)
      e.terms.push_back(
          {Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
           power_atom(rng.pick(2) == 0 ? Side::Positive : Side::Negative,
                      rng.uniform(-2, 2), rng.pick(2))});
    const double s = rng.pick(2) == 0 ? 1.0 : -1.0;
    const double a = s * rng.uniform(0.1, 2.0);
    const double b = s * rng.uniform(0.1, 2.0);
    CHECK(equals(mul_monomial(a, mul_monomial(b, e)),
                 mul_monomial(a + b, e), 1e-11));
  }
}

TEST_CASE("mul_monomial rejections") {
  CHECK_THROWS_AS(mul_monomial(0.5, harmonic(1.0)), UnsupportedAtom);
  CHECK_THROWS_AS(
      mul_monomial(0.5, Expression(1.0, pole_atom(Complex(0, 1), 1))),
      UnsupportedAtom);
  CHECK_THROWS_AS(mul_monomial(0.5, Expression(1.0, delta_atom(1, 2.0))),
                  UnsupportedAtom);
  // shifted order-0 delta picks up the branch value of a^alpha
  const Expression d = mul_monomial(0.5, Expression(1.0, delta_atom(0, -4.0)));
  REQUIRE(d.terms.size() == 1);
  CHECK(std::abs(d.terms[0].coeff - Complex(0.0, -2.0)) < 1e-14);
}

TEST_CASE("derivatives of the principal value and logarithm") {
  CHECK(equals(derivative(vp_recip()), -1.0 * pf_power(-2.0), 1e-12));
  CHECK(equals(derivative(log_abs()), vp_recip(), 1e-12));
  CHECK(equals(derivative(log_x()), vp_recip() + (I * kPi) * delta(), 1e-12));
  CHECK(equals(derivative(heaviside(1)), delta(), 1e-12));
  CHECK(equals(derivative(heaviside(-1)), -1.0 * delta(), 1e-12));
}

TEST_CASE("derivative of Pf 1/|x| follows the product-rule chain") {
  const Expression abs_recip = pf_abs_power(-1.0);
  // D: -Pf sgn(x)/x^2 - 2 delta'
  Expression sgn_over_x2;
  sgn_over_x2.terms.push_back({1.0, power_atom(Side::Positive, -2.0)});
  sgn_over_x2.terms.push_back({-1.0, power_atom(Side::Negative, -2.0)});
  CHECK(equals(derivative(abs_recip),
               -1.0 * sgn_over_x2 - 2.0 * delta(1), 1e-12));
  // D^2: 2 Pf sgn(x)/x^3 - 3 delta''
  Expression sgn_over_x3;
  sgn_over_x3.terms.push_back({1.0, power_atom(Side::Positive, -3.0)});
  sgn_over_x3.terms.push_back({1.0, power_atom(Side::Negative, -3.0)});
  CHECK(equals(derivative(abs_recip, 2), 2.0 * sgn_over_x3 - 3.0 * delta(2),
               1e-12));
}

TEST_CASE("derivative handles oscillation, decay and pole atoms") {
  // d/dx [H(-x) e^{x}] = -delta + H(-x) e^{x}
  const Expression decayed(1.0, power_atom(Side::Negative, 0.0, 0, 0.0, 1.0));
  CHECK(equals(derivative(decayed), -1.0 * delta() + decayed, 1e-12));
  // d/dx e^{iax} = ia e^{iax}
  CHECK(equals(derivative(harmonic(2.0)), (2.0 * I) * harmonic(2.0), 1e-12));
  // d/dx Pf(x-i)^{-1} = -Pf(x-i)^{-2}
  const Expression pole(1.0, pole_atom(I, 1));
  CHECK(equals(derivative(pole),
               Expression(-1.0, pole_atom(I, 2)), 1e-12));
  CHECK_THROWS_AS(
      derivative(Expression(1.0, kernel_atom(KernelKind::FermiSinh, 1.0))),
      UnsupportedAtom);
}

TEST_CASE("iterated first derivatives equal the n-th derivative") {
  testing::Rng rng;
  for (int i = 0; i < 50; ++i) {
    Expression e;
    e.terms.push_back({Complex(rng.uniform(-2, 2), 0.0),
                       power_atom(Side::Positive, rng.uniform(-2.5, 2.5))});
    e.terms.push_back({Complex(rng.uniform(-2, 2), 0.0),
                       delta_atom(rng.pick(3))});
    Expression three = derivative(derivative(derivative(e)));
    CHECK(equals(three, derivative(e, 3), 1e-12));
  }
}

TEST_CASE("operations are linear") {
  testing::Rng rng;
  for (int i = 0; i < 50; ++i) {
    Expression a;
    Expression b;
    a.terms.push_back({Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                       power_atom(Side::Positive, rng.uniform(-2, 2))});
    b.terms.push_back({Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                       power_atom(Side::Negative, rng.uniform(-2, 2))});
    const Complex c1(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const Complex c2(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const double alpha = rng.uniform(-1.5, 1.5);
    CHECK(equals(mul_monomial(alpha, c1 * a + c2 * b),
                 c1 * mul_monomial(alpha, a) + c2 * mul_monomial(alpha, b),
                 1e-11));
    CHECK(equals(derivative(c1 * a + c2 * b),
                 c1 * derivative(a) + c2 * derivative(b), 1e-11));
  }
}
