#include "distcalc/numcheck.hpp"

#include <cmath>

namespace distcalc {

namespace {

// Physicists' Hermite polynomial coefficients, H_{j+1} = 2x H_j - 2j H_{j-1}.
std::vector<double> hermite_poly(int j) {
  std::vector<double> prev{1.0};
  if (j == 0) return prev;
  std::vector<double> cur{0.0, 2.0};
  for (int k = 1; k < j; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= 2.0 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double poly_at(const std::vector<double>& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

HermiteFunction::HermiteFunction(int index, int max_deriv) : index_(index) {
  if (index < 0) throw DomainError("HermiteFunction: negative index");
  poly_.push_back(hermite_poly(index));
  // P_{r+1} = P_r' - x P_r.
  for (int r = 0; r < max_deriv; ++r) {
    const auto& p = poly_.back();
    std::vector<double> next(p.size() + 1, 0.0);
    for (size_t i = 1; i < p.size(); ++i) next[i - 1] += i * p[i];
    for (size_t i = 0; i < p.size(); ++i) next[i + 1] -= p[i];
    poly_.push_back(std::move(next));
  }
}

double HermiteFunction::value(double x) const {
  return poly_at(poly_[0], x) * std::exp(-0.5 * x * x);
}

double HermiteFunction::derivative(double x, int order) const {
  if (order < 0 || order >= static_cast<int>(poly_.size()))
    throw DomainError("HermiteFunction: derivative order out of range");
  return poly_at(poly_[order], x) * std::exp(-0.5 * x * x);
}

}  // namespace distcalc
