#pragma once

#include <string>
#include <vector>

#include "distcalc/expression.hpp"

namespace distcalc {

struct CatalogEntry {
  std::string name;
  Expression expr;
};

// The reference catalog used by the transform and oracle suites:
// Vp 1/x, sgn, H, delta^(n) for n <= 3, Pf x^g for
// g in {1/2, -1/2, 3/2, -3/2, 2, -2}, log|x|.
std::vector<CatalogEntry> transform_catalog();

// Ten expressions whose fractional pipeline stays inside the rule table
// for every order in the semigroup grid (both sign classes).
std::vector<CatalogEntry> semigroup_catalog();

}  // namespace distcalc
