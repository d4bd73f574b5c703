#include "distcalc/parser.hpp"

#include "distcalc/builders.hpp"
#include "distcalc/catalog.hpp"
#include "distcalc/fourier.hpp"
#include "distcalc/fracderiv.hpp"
#include "distcalc/render.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace distcalc;

TEST_CASE("atoms parse to their decompositions") {
  CHECK(equals(parse("Vp(1/x)"), vp_recip(), 1e-14));
  CHECK(equals(parse("H(x)"), heaviside(1), 1e-14));
  CHECK(equals(parse("H(-x)"), heaviside(-1), 1e-14));
  CHECK(equals(parse("sgn(x)"), sgn(), 1e-14));
  CHECK(equals(parse("log|x|"), log_abs(), 1e-14));
  CHECK(equals(parse("log(x)"), log_x(), 1e-14));
  CHECK(equals(parse("Pf(x^-0.5)"), pf_power(-0.5), 1e-14));
  CHECK(equals(parse("Pf(|x|^1.5)"), pf_abs_power(1.5), 1e-14));
  CHECK(equals(parse("exp(i*2*x)"), harmonic(2.0), 1e-14));
  CHECK(equals(parse("exp(i*-2*x)"), harmonic(-2.0), 1e-14));
  CHECK(equals(parse("delta''"), delta(2), 1e-14));
  CHECK(equals(parse("delta'(1.5)"), Expression(1.0, delta_atom(1, 1.5)),
               1e-14));
  CHECK(equals(parse("kernel(fermi; 2)"),
               Expression(1.0, kernel_atom(KernelKind::FermiSinh, 2.0)),
               1e-14));
  CHECK(equals(parse("Pf(H(-x)*|x|^2*exp(-i*1.5*x)*exp(-2*|x|))"),
               Expression(1.0, power_atom(Side::Negative, 2.0, 0, 1.5, 2.0)),
               1e-14));
}

TEST_CASE("scalar arithmetic and mixed sums") {
  CHECK(equals(parse("2*Pf(x^-0.5) + delta'"),
               2.0 * pf_power(-0.5) + delta(1), 1e-14));
  CHECK(equals(parse("3"), constant(3.0), 1e-14));
  CHECK(equals(parse("2 + delta"), constant(2.0) + delta(), 1e-14));
  CHECK(equals(parse("-pi*i*sgn(x)"), Complex(0.0, -kPi) * sgn(), 1e-14));
  CHECK(equals(parse("sqrt(pi)*H(x)"), kSqrtPi * heaviside(1), 1e-14));
  CHECK(equals(parse("2^0.5*delta"), std::sqrt(2.0) * delta(), 1e-14));
  CHECK(equals(parse("(1+2*i)*delta"), Complex(1.0, 2.0) * delta(), 1e-14));
  CHECK(equals(parse("i^2*delta"), -1.0 * delta(), 1e-13));
}

TEST_CASE("rational atoms") {
  CHECK(equals(parse("rat(1; x^2)"), pf_power(-2.0), 1e-12));
  const Expression p = parse("rat(1; x-(0+1*i))");
  REQUIRE(p.terms.size() == 1);
  CHECK(std::holds_alternative<RationalPole>(p.terms[0].atom));
  CHECK(equals(parse("rat(x^2+1; 1)"), polynomial({1.0, 0.0, 1.0}), 1e-12));
  CHECK(equals(parse("rat(1; (x-(0+1*i))^2)"),
               Expression(1.0, pole_atom(Complex(0, 1), 2)), 1e-12));
}

TEST_CASE("diagnostics carry a position") {
  CHECK_THROWS_AS(parse("H(y)"), ParseError);
  CHECK_THROWS_AS(parse("2*"), ParseError);
  CHECK_THROWS_AS(parse("delta*delta"), ParseError);
  CHECK_THROWS_AS(parse("frobnicate"), ParseError);
  CHECK_THROWS_AS(parse("H(x)^2"), ParseError);
  try {
    parse("2*Pf(x^0.5");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position >= 9);
  }
}

TEST_CASE("rational recognizer") {
  CHECK(try_parse_rational("rat(1; x^2-4)").has_value());
  CHECK_FALSE(try_parse_rational("Vp(1/x)").has_value());
  CHECK_FALSE(try_parse_rational("rat(1; x) + delta").has_value());
}

TEST_CASE("malformed input never escapes the error types") {
  // Random strings over the grammar alphabet must either parse or raise
  // a library error; nothing else may escape.
  testing::Rng rng;
  const std::string alphabet = "PfVpHxi0123456789.*^+-()|;' deltaratkernel";
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    const int len = 1 + rng.pick(24);
    for (int k = 0; k < len; ++k)
      s += alphabet[rng.pick(static_cast<int>(alphabet.size()))];
    try {
      (void)parse(s);
    } catch (const Error&) {
      // expected for most inputs
    }
  }
}

TEST_CASE("render/parse round trip on a corpus") {
  std::vector<std::string> corpus = {
      "Vp(1/x)",
      "2*Pf(x^-0.5) + delta'",
      "H(x) - H(-x)",
      "log(x)",
      "log|x| + gamma_em",
      "-i*pi*sgn(x)",
      "exp(i*2*x) + exp(i*-2*x)",
      "delta''(1.5) + 2*delta",
      "Pf(|x|^-2.5)",
      "Pf(H(-x)*|x|^0.5)",
      "Pf(H(x)*x^2*exp(-3*|x|))",
      "kernel(bose; 0.5)",
      "rat(1; (x-(0+1*i))^2)",
      "sqrt(pi)*Pf(x^0.5)",
      "Pf(x^1*log|x|)",
      "3.25*Pf(|x|^0.5*log|x|)",
  };
  // widen with catalog entries and a few pipeline outputs
  for (const auto& entry : transform_catalog()) {
    corpus.push_back(render(entry.expr));
    corpus.push_back(render(ft(entry.expr)));
  }
  for (double a : {0.5, -0.5, -1.0})
    corpus.push_back(render(frac_d(a, vp_recip())));
  testing::Rng rng;
  while (corpus.size() < 50)
    corpus.push_back(render(testing::random_expression(rng)));

  for (const auto& src : corpus) {
    CAPTURE(src);
    const Expression e1 = parse(src);
    const std::string r1 = render(e1);
    const Expression e2 = parse(r1);
    const std::string r2 = render(e2);
    CHECK(r1 == r2);
    CHECK(equals(e1, e2, 1e-12));
  }
}
