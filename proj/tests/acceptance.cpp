// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failed criteria.  Tolerances are pinned in code next to each check.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "distcalc/algebra.hpp"
#include "distcalc/builders.hpp"
#include "distcalc/catalog.hpp"
#include "distcalc/fourier.hpp"
#include "distcalc/fracderiv.hpp"
#include "distcalc/fseries.hpp"
#include "distcalc/numcheck.hpp"
#include "distcalc/render.hpp"
#include "distcalc/tables.hpp"

using namespace distcalc;

namespace {

const Complex I(0.0, 1.0);
int g_failures = 0;

struct Criterion {
  std::string label;
  std::vector<std::string> notes;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
};

void run(int number, const std::string& label,
         const std::function<void(Criterion&)>& body,
         double max_seconds = 0.0) {
  Criterion c;
  c.label = label;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes.push_back(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (max_seconds > 0.0 && secs > max_seconds) {
    c.ok = false;
    c.notes.push_back("runtime over budget");
  }
  std::printf("[%s] criterion %d: %s (%.2fs)\n", c.ok ? "PASS" : "FAIL",
              number, label.c_str(), secs);
  for (const auto& n : c.notes) std::printf("       %s\n", n.c_str());
  if (!c.ok) ++g_failures;
}

// Drive the installed CLI; returns the exit code.
int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(DISTCALC_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return status == -1 ? -1 : WEXITSTATUS(status);
}

Expression half_neg(double g) {
  return Expression(1.0, power_atom(Side::Negative, g));
}
Expression half_pos(double g) {
  return Expression(1.0, power_atom(Side::Positive, g));
}
Expression x_log_abs() {
  Expression e;
  e.terms.push_back({1.0, power_atom(Side::Positive, 1.0, 1)});
  e.terms.push_back({-1.0, power_atom(Side::Negative, 1.0, 1)});
  return e;
}

void criterion_tables_1(Criterion& c) {
  int rows = 0;
  int footnoted = 0;
  for (const char* which : {"1a", "1b"}) {
    for (const auto& row : table_rows(which)) {
      ++rows;
      c.require(row.matches, std::string(which) + " row " + row.input);
      if (!row.footnote.empty()) ++footnoted;
    }
  }
  c.require(rows == 16, "16 rows emitted");
  c.require(footnoted == 1, "exactly the x^{+1/2} row is footnoted");
  c.require(run_cli("table --which 1a") == 0, "CLI table --which 1a exits 0");
  c.require(run_cli("table --which 1b") == 0, "CLI table --which 1b exits 0");
  if (footnoted == 1)
    c.notes.push_back(
        "x^{+1/2} prefactor oracle-arbitrated to sqrt(pi); published "
        "1/sqrt(pi) footnoted in the table output");
}

void criterion_tables_2(Criterion& c) {
  const auto rows = table_rows("2");
  c.require(rows.size() == 4, "4 rows emitted");
  for (const auto& row : rows) c.require(row.matches, "row " + row.input);
  c.require(run_cli("table --which 2") == 0, "CLI table --which 2 exits 0");
}

void criterion_golden(Criterion& c) {
  const double tol = 1e-10;
  c.require(equals(frac_d(0.5, polynomial({0.0, 1.0})),
                   (2.0 / kSqrtPi) * pf_power(0.5), tol),
            "D^{1/2} x = (2/sqrt(pi)) sqrt(x)");
  c.require(equals(frac_d(0.5, heaviside(1)),
                   (1.0 / kSqrtPi) * half_pos(-0.5), tol),
            "D^{1/2} H = Pf H(x)/sqrt(pi x)");
  c.require(equals(frac_d(0.5, delta()),
                   (-0.5 / kSqrtPi) * half_pos(-1.5), tol),
            "D^{1/2} delta = -Pf H(x)/(2 sqrt(pi) |x|^{3/2})");
  c.require(equals(frac_d(0.5, frac_d(0.5, pf_power(-0.5))),
                   -0.5 * pf_power(-1.5), tol),
            "D^{1/2} D^{1/2} x^{-1/2} = -(1/2) x^{-3/2}");
  // The published value for D^{1/2} Vp 1/x omits the sqrt(pi)/2
  // prefactor; with it the composition law D^{1/2} D^{1/2} = D would
  // fail.  The suite asserts the composition-consistent value and keeps
  // the inconsistency of the published one as a regression.
  const Expression dv = frac_d(0.5, vp_recip());
  c.require(equals(dv, (-kSqrtPi / 2.0) * half_neg(-1.5), tol),
            "D^{1/2} Vp 1/x = -(sqrt(pi)/2) Pf H(-x)/|x|^{3/2}");
  c.require(equals(frac_d(0.5, dv), derivative(vp_recip()), tol),
            "D^{1/2} composed twice on Vp 1/x gives D Vp 1/x");
  c.require(!equals(dv, -1.0 * half_neg(-1.5), 1e-6),
            "published prefactor stays incompatible (regression)");
  c.notes.push_back(
      "D^{1/2} Vp 1/x asserted with the composition-consistent prefactor "
      "sqrt(pi)/2; the published value without it fails D^{1/2}D^{1/2}=D");
  c.require(equals(frac_d(-1.0, vp_recip()),
                   kEulerGamma * one() + log_abs(), tol),
            "D^{-1} Vp 1/x = gamma_em + log|x|");
  c.require(equals(frac_d(-2.0, vp_recip()),
                   (kEulerGamma - 1.0) * polynomial({0.0, 1.0}) + x_log_abs(),
                   tol),
            "D^{-2} Vp 1/x = (gamma_em + log|x| - 1) x");
  const auto demo = noncommutativity_demo();
  c.require(equals(demo.first, heaviside(1), tol), "D D^{-1} H = H");
  c.require(equals(demo.second, 0.5 * sgn(), tol), "D^{-1} D H = sgn/2");
}

void criterion_semigroup(Criterion& c) {
  const double grid[] = {0.25, 0.5, 1.0, 1.5};
  const auto catalog = semigroup_catalog();
  c.require(catalog.size() == 10, "catalog has 10 expressions");
  for (const auto& entry : catalog) {
    for (double sign : {1.0, -1.0}) {
      for (double a : grid) {
        for (double b : grid) {
          const SemigroupReport rep =
              check_semigroup(sign * a, sign * b, entry.expr, 1e-10);
          c.require(rep.equal, "semigroup " + entry.name + " at (" +
                                   std::to_string(sign * a) + ", " +
                                   std::to_string(sign * b) + ")");
        }
      }
    }
  }
  const SemigroupReport mixed = check_semigroup(-1.0, 1.0, heaviside(1));
  c.require(!mixed.equal && mixed.order_dependent,
            "mixed-sign Heaviside case fails equality (non-commutativity)");
}

void criterion_extension(Criterion& c) {
  auto catalog = semigroup_catalog();
  catalog.push_back({"1", one()});
  catalog.push_back({"x", polynomial({0.0, 1.0})});
  catalog.push_back({"x^2", polynomial({0.0, 0.0, 1.0})});
  catalog.push_back({"H(x)", heaviside(1)});
  catalog.push_back({"log|x|", log_abs()});
  for (const auto& entry : catalog) {
    for (int n : {1, 2, 3}) {
      c.require(equals(frac_d(static_cast<double>(n), entry.expr),
                       derivative(entry.expr, n), 1e-10),
                "extension " + entry.name + " at n=" + std::to_string(n));
    }
  }
  for (double a : {0.3, 0.5, 1.0, 1.5, 2.7})
    c.require(frac_d(a, one()).empty(),
              "D^{" + std::to_string(a) + "} 1 = 0");
  c.require(equals(frac_d(-0.5, one()),
                   (1.0 / gamma(Complex(1.5))) * pf_power(0.5), 1e-10),
            "D^{-1/2} 1 = x^{1/2}/Gamma(3/2)");
}

void criterion_double_transform(Criterion& c) {
  for (const auto& entry : transform_catalog())
    c.require(equals(ft(ft(entry.expr)), (2.0 * kPi) * reflect(entry.expr),
                     1e-10),
              "F F = 2 pi reflect on " + entry.name);
}

void criterion_oracle(Criterion& c) {
  c.require(hermite_eigenrelation_gate(8, 1e-9),
            "hermite eigenrelation gate at 1e-9");
  for (const auto& entry : transform_catalog()) {
    const FtCheckReport rep = check_ft(entry.expr, 8, 1e-6);
    c.require(rep.all_pass, "<F T, h_j> identity for " + entry.name);
  }
}

void criterion_quantum(Criterion& c) {
  for (double beta : {1.0, 2.0}) {
    c.require(check_quantum(QuantumStat::Fermi, beta, 4, 1e-5).all_pass,
              "fermi agreement at beta=" + std::to_string(beta));
    c.require(check_quantum(QuantumStat::Bose, beta, 4, 1e-5).all_pass,
              "bose agreement at beta=" + std::to_string(beta));
  }
  const double d5 = quantum_step_deviation(5.0, 1);
  const double d10 = quantum_step_deviation(10.0, 1);
  const double d20 = quantum_step_deviation(20.0, 1);
  c.require(d5 > d10 && d10 > d20,
            "deviation from the step transform shrinks monotonically");
}

double sawtooth_closed(double alpha, double x, int order) {
  double acc = 0.0;
  for (int n = 1; n <= order; ++n) {
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    if (alpha > 0)
      acc += sign * (std::sin(n * x) + std::cos(n * x)) / std::sqrt(n);
    else
      acc += sign * (std::sin(n * x) - std::cos(n * x)) / std::pow(n, 1.5);
  }
  return std::sqrt(2.0) * acc;
}

void criterion_series(Criterion& c) {
  // coefficient semigroup at order 50
  const PeriodicSeries s = sawtooth_series(50);
  const FracSeries once = series_frac(0.5, s);
  PeriodicSeries mid;
  mid.order = 50;
  mid.coeffs = once.coeffs;
  const FracSeries twice = series_frac(0.5, mid);
  const FracSeries direct = series_frac(1.0, s);
  bool coeffs_ok = twice.coeffs.size() == direct.coeffs.size();
  for (const auto& [n, v] : direct.coeffs) {
    const auto it = twice.coeffs.find(n);
    coeffs_ok = coeffs_ok && it != twice.coeffs.end() &&
                std::abs(it->second - v) <= 1e-12 * std::max(1.0, std::abs(v));
  }
  c.require(coeffs_ok, "half o half = derivative coefficientwise at N=50");

  // closed-form coefficients for both presets at alpha = +-1/2
  const int order = 30;
  const FracSeries dsaw = series_frac(0.5, sawtooth_series(order));
  const FracSeries isaw = series_frac(-0.5, sawtooth_series(order));
  for (double x : {-2.5, -1.0, 0.4, 1.7, 2.9}) {
    c.require(std::abs(abel_eval(dsaw, x, 0.0) -
                       Complex(sawtooth_closed(0.5, x, order))) < 1e-12,
              "sawtooth +1/2 closed form");
    c.require(std::abs(abel_eval(isaw, x, 0.0) -
                       Complex(sawtooth_closed(-0.5, x, order))) < 1e-12,
              "sawtooth -1/2 closed form");
  }
  const FracSeries itri = series_frac(-0.5, triangle_series(order));
  c.require(itri.aperiodic.has_value() &&
                std::abs(itri.aperiodic->coeff - Complex(kSqrtPi)) < 1e-12 &&
                std::abs(itri.aperiodic->exponent - 0.5) < 1e-14,
            "triangle -1/2 aperiodic term is sqrt(pi x)");
  const FracSeries dtri = series_frac(0.5, triangle_series(order));
  for (double x : {0.3, 1.2}) {
    double ref = 0.0;
    for (int k = 1; k <= order; k += 2)
      ref += (std::cos(k * x) - std::sin(k * x)) / (std::sqrt(k) * k);
    ref *= -4.0 / (kPi * std::sqrt(2.0));
    c.require(std::abs(abel_eval(dtri, x, 0.0) - Complex(ref)) < 1e-12,
              "triangle +1/2 closed form");
  }

  // figure data: 512-point grids for N in {5, 10, 20, 30}
  std::vector<double> grid(512);
  for (size_t i = 0; i < grid.size(); ++i)
    grid[i] = -kPi + 2.0 * kPi * static_cast<double>(i) / 511.0;
  for (int n : {5, 10, 20, 30}) {
    const FracSeries fs = series_frac(0.5, sawtooth_series(n));
    std::ostringstream csv;
    sample(fs, grid, 0.0, csv);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);  // metadata
    std::getline(in, line);
    bool ok = line == "x,re,im";
    std::vector<std::pair<double, double>> rows;
    while (std::getline(in, line)) {
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 + 1);
      rows.emplace_back(std::stod(line.substr(0, c1)),
                        std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
    }
    ok = ok && rows.size() == 512;
    for (int k = 0; k < 10 && ok; ++k) {
      const auto& [x, re] = rows[k * 51];
      ok = std::abs(re - sawtooth_closed(0.5, x, n)) < 1e-12;
    }
    c.require(ok, "figure CSV at N=" + std::to_string(n) +
                      " matches the closed form on spot checks");
  }
}

void criterion_scalar(Criterion& c) {
  c.require(std::abs(branch_log(Complex(-1.0, 0.0)) - (-I * kPi)) < 1e-15,
            "log(-1) = -i pi");
  c.require(std::abs(branch_pow(Complex(-1.0, 0.0), 0.5) - (-I)) < 1e-15,
            "sqrt(-1) = -i");
  uint64_t state = 88172645463325252ull;
  auto uniform = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return -4.0 + 8.0 * (static_cast<double>(state >> 11) / 9007199254740992.0);
  };
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k < 50; ++k) {
      const double a = uniform();
      const Complex v = branch_pow(I, n + a) * branch_pow(-I, n - a) *
                        branch_pow(Complex(-1.0, 0.0), a);
      c.require(std::abs(v - Complex(1.0)) < 1e-12, "prefactor unity grid");
    }
  }
  double fact = 1.0, fact2n = 1.0;
  for (int n = 0; n <= 10; ++n) {
    if (n > 0) {
      fact *= n;
      fact2n *= (2 * n - 1) * (2 * n);
    }
    const Complex v = gamma(Complex(n + 0.5)) * std::pow(4.0, n) * fact / fact2n;
    c.require(std::abs(v - Complex(kSqrtPi)) < 1e-12 * kSqrtPi,
              "gamma half-integer formula at n=" + std::to_string(n));
  }
}

}  // namespace

int main() {
  run(1, "table 1a/1b reproduction", criterion_tables_1, 1.0);
  run(2, "table 2 rational transforms", criterion_tables_2, 1.0);
  run(3, "worked-example golden suite", criterion_golden);
  run(4, "semigroup property grid", criterion_semigroup);
  run(5, "extension and annihilation", criterion_extension);
  run(6, "double transform is 2 pi reflection", criterion_double_transform);
  run(7, "quadrature oracle suite", criterion_oracle, 30.0);
  run(8, "quantum statistics agreement and limit trend", criterion_quantum);
  run(9, "periodic series", criterion_series);
  run(10, "scalar branch and gamma layer", criterion_scalar);
  if (g_failures == 0) std::printf("all criteria passed\n");
  return g_failures;
}
