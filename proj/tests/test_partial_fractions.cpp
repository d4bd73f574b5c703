#include "distcalc/partial_fractions.hpp"

#include <cmath>

#include "doctest.h"

using namespace distcalc;

TEST_CASE("simple real poles: 1/(x^2 - 4)") {
  const PartialFractions pf = partial_fractions({{1.0}, {-4.0, 0.0, 1.0}});
  CHECK(pf.poly.empty());
  REQUIRE(pf.poles.size() == 2);
  // sorted by real part: -2 then +2
  CHECK(std::abs(pf.poles[0].z - Complex(-2.0)) < 1e-10);
  CHECK(std::abs(pf.poles[1].z - Complex(2.0)) < 1e-10);
  CHECK(std::abs(pf.poles[0].coeffs[0] - Complex(-0.25)) < 1e-10);
  CHECK(std::abs(pf.poles[1].coeffs[0] - Complex(0.25)) < 1e-10);
}

TEST_CASE("polynomial part and complex pole: x^2/(x - i)") {
  const PartialFractions pf =
      partial_fractions({{0.0, 0.0, 1.0}, {Complex(0.0, -1.0), 1.0}});
  REQUIRE(pf.poly.size() == 2);
  CHECK(std::abs(pf.poly[0] - Complex(0.0, 1.0)) < 1e-12);  // P* = x + i
  CHECK(std::abs(pf.poly[1] - Complex(1.0)) < 1e-12);
  REQUIRE(pf.poles.size() == 1);
  CHECK(std::abs(pf.poles[0].z - Complex(0.0, 1.0)) < 1e-10);
  CHECK(std::abs(pf.poles[0].coeffs[0] - Complex(-1.0)) < 1e-10);
}

TEST_CASE("double pole: (x-1)^{-2}") {
  const PartialFractions pf = partial_fractions({{1.0}, {1.0, -2.0, 1.0}});
  REQUIRE(pf.poles.size() == 1);
  CHECK(pf.poles[0].mult == 2);
  CHECK(std::abs(pf.poles[0].z - Complex(1.0)) < 1e-10);
  CHECK(std::abs(pf.poles[0].coeffs[1] - Complex(1.0)) < 1e-9);  // a_2
  CHECK(std::abs(pf.poles[0].coeffs[0]) < 1e-9);                 // a_1
}

TEST_CASE("mixed multiplicities reconstruct") {
  // (3x + 1) / ((x - (1+i))^2 (x - 3))
  const std::vector<Complex> den = {
      Complex(1.0, 0.0) * -3.0 * (Complex(1, 1) * Complex(1, 1)),
      Complex(1, 1) * Complex(1, 1) + 6.0 * Complex(1, 1),
      -2.0 * Complex(1, 1) - 3.0,
      1.0,
  };
  const PartialFractions pf = partial_fractions({{1.0, 3.0}, den});
  REQUIRE(pf.poles.size() == 2);
  // reconstruction at a probe point
  const Complex x(0.25, -0.7);
  Complex recon = poly_eval(pf.poly, x);
  for (const auto& pg : pf.poles) {
    Complex dx = 1.0;
    for (int j = 1; j <= pg.mult; ++j) {
      dx *= (x - pg.z);
      recon += pg.coeffs[j - 1] / dx;
    }
  }
  const Complex direct = poly_eval({1.0, 3.0}, x) / poly_eval(den, x);
  CHECK(std::abs(recon - direct) < 1e-9 * (1.0 + std::abs(direct)));
}

TEST_CASE("degenerate input") {
  CHECK_THROWS_AS(partial_fractions({{1.0}, {}}), DomainError);
  const PartialFractions pf = partial_fractions({{2.0, 4.0}, {2.0}});
  CHECK(pf.poles.empty());
  REQUIRE(pf.poly.size() == 2);
  CHECK(std::abs(pf.poly[1] - Complex(2.0)) < 1e-14);
}
