#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slodowy/liealg/slice.hpp"

namespace slodowy::slicegeom {

using exact::MPoly;
using liealg::AlgebraDescriptor;
using liealg::SliceChart;

inline const std::string kLambda = "lambda";

struct SliceInvariants {
  SliceChart chart;
  MPoly chi;                        // det(λ − s) in λ and the chart coordinates
  std::vector<MPoly> coefficients;  // coefficients[k] multiplies λ^{dim−k}
  std::optional<MPoly> pfaff;       // pf(G s) for even-dimensional so
};

SliceInvariants restrict_invariants(const SliceChart& chart, const AlgebraDescriptor& g);

// Chart weights plus weight 2 for λ.
exact::Weights invariant_weights(const SliceChart& chart);

// Every term of chi has the weighted degree of λ^dim.
bool chi_quasi_homogeneous(const SliceInvariants& inv);

}  // namespace slodowy::slicegeom
