#pragma once

#include <string>

#include "distcalc/expression.hpp"

namespace distcalc {

// Canonical text form of an expression.  Deterministic (canonical atom
// order), recognizes the standard whole-line combinations (Vp(1/x),
// sgn(x), Pf(x^g), Pf(|x|^g), log|x|, constants) and renders small
// multiples of pi, sqrt(pi), sqrt(2*pi), pi^2 and gamma_em symbolically.
// The output round-trips through parse().
std::string render(const Expression& e);

// One atom, without coefficient (used by the JSON emitter).
std::string render_atom(const Atom& a);

// Shortest round-trip decimal, or a symbolic constant multiple.
std::string render_real(double v);

}  // namespace distcalc
