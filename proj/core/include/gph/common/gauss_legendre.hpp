#pragma once

#include <utility>
#include <vector>

namespace gph {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum = 2
};

// Gauss-Legendre rule of order q (cached).
const GaussRule& gauss_legendre(int q);

// Nodes/weights mapped to [a, b].
struct MappedRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
MappedRule gauss_on_interval(int q, double a, double b);

}  // namespace gph
