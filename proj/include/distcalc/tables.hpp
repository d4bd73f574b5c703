#pragma once

#include <string>
#include <vector>

#include "distcalc/expression.hpp"

namespace distcalc {

struct TableRow {
  std::string input;       // source text of the transformed distribution
  Expression computed;     // what the rule table produces
  Expression expected;     // reference value (oracle-arbitrated where noted)
  bool matches = false;    // equals(computed, expected, 1e-12)
  std::string footnote;    // set when the reference deviates from a
                           // published value
};

// The half-integer power transform tables ("1a": x^{n+1/2},
// "1b": |x|^{n+1/2}, n = -4..3) and the rational-function table ("2").
// In table 1a the x^{+1/2} row carries the oracle-arbitrated prefactor
// sqrt(pi); the footnote records the discrepant published prefactor.
std::vector<TableRow> table_rows(const std::string& which);

}  // namespace distcalc
