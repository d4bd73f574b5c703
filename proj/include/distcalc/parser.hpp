#pragma once

#include <optional>
#include <string>

#include "distcalc/expression.hpp"
#include "distcalc/partial_fractions.hpp"

namespace distcalc {

/* Expression grammar (no implicit multiplication, '^' on scalars only):

     expr   := ['-'] term (('+'|'-') term)*
     term   := factor ('*' factor)*
     factor := base ['^' base]
     base   := number | 'i' | 'pi' | 'gamma_em' | 'sqrt' '(' expr ')'
             | '(' expr ')' | atom
     atom   := 'Vp(1/x)'
             | 'Pf(' pf-body ')'
             | 'H(x)' | 'H(-x)' | 'sgn(x)'
             | 'log(x)' | 'log|x|'
             | 'delta' quote* ['(' real ')']
             | 'exp(i*' real '*x)'
             | 'rat(' poly ';' poly ')'
             | 'kernel(' ('fermi'|'bose') ';' real ')'
     pf-body := 'x^' real ['*log|x|']
              | '|x|^' real ['*log|x|']
              | ('H(x)'|'H(-x)') ('*' pf-factor)*
     pf-factor := 'x^' real | '|x|^' real | 'log(x)' | 'log|x|'
                | 'exp(-i*' real '*x)' | 'exp(-' real '*|x|)'
     poly   := ['-'] pterm (('+'|'-') pterm)*
     pterm  := pfac ('*' pfac)*
     pfac   := (number | 'i' | 'pi' | 'x' | '(' poly ')') ['^' integer]

   Scalars mixed into a sum with distributions become constant
   distributions; a product of two distribution atoms is a ParseError.
   render() output always re-parses to an equal expression. */
Expression parse(const std::string& src);

// Recognizes an input that is exactly one rat(P; Q) atom and returns
// its coefficient lists (the CLI transforms those through ft_rational,
// which also handles nonzero real poles).
std::optional<RationalSpec> try_parse_rational(const std::string& src);

}  // namespace distcalc
