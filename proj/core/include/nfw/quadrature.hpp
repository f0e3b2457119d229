#pragma once

#include <vector>

namespace nfw {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule computed by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

// Cached 16-point rule used by the panel quadratures.
const GaussRule& gauss_legendre_16();

}  // namespace nfw
