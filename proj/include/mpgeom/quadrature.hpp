#pragma once

#include <vector>

namespace mpg {

struct QuadratureRule {
  std::vector<double> nodes, weights;
};

// n-point rule for the integral of f(x) e^{-x} over [0, inf). Weights that
// underflow are returned as zero. Rules are cached, so repeated calls are cheap.
const QuadratureRule &gauss_laguerre(int n);
// n-point rule on [-1, 1].
const QuadratureRule &gauss_legendre(int n);

} // namespace mpg
