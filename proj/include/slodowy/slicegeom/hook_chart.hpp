#pragma once

#include <string>
#include <vector>

#include "slodowy/slicegeom/hypersurface.hpp"

namespace slodowy::slicegeom {

// sp_{2n} at the orbit [2n−2,1,1], with the slice written in coordinates a, b, x, y, z, t1..t_{n−1}.
struct HookModel {
  int n = 0;
  AlgebraDescriptor algebra;
  SliceChart chart;
};

HookModel symplectic_hook_model(int n);
std::vector<std::string> hook_elimination_order(int n);

// (2n−3)!·(a²x + 2aby + b²z) − (xz − y²)^n
MPoly hook_expected_f(int n);
// (2n−3)!·(a²x + 2aby + b²z)
MPoly hook_linear_part(int n);

struct FactorizationCheck {
  MPoly quotient;
  MPoly remainder;
  MPoly block_charpoly;  // charpoly of the upper-left (2n−2)-block of s
  bool holds = false;
};

// chi − (2n−3)!(a²x+2aby+b²z) divided by λ² + xz − y².
FactorizationCheck hook_factorization(const HookModel& model, const SliceInvariants& inv);

}  // namespace slodowy::slicegeom
