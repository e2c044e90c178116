#pragma once

#include <vector>

namespace tpt {

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss rule for the weight (1-x)^a (1+x)^b on [-1, 1], a, b > -1.
GaussRule gauss_jacobi(int n, double a, double b);

}  // namespace tpt
