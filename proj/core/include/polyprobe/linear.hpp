#pragma once

#include "polyprobe/rational.hpp"

#include <vector>

namespace polyprobe {

using RatMatrix = std::vector<std::vector<Rational>>;

struct LinearSystemSolution {
  bool feasible = false;
  // Free variables are pinned to zero in the particular solution.
  std::vector<Rational> particular;
  // Basis of the homogeneous solution space; empty when the solution is unique.
  std::vector<std::vector<Rational>> nullspace;
};

// Exact Gauss-Jordan elimination over the rationals.
LinearSystemSolution solve_linear(RatMatrix matrix, std::vector<Rational> rhs);

}  // namespace polyprobe
