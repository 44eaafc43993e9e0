#pragma once

#include <string>
#include <vector>

#include "slodowy/liealg/triple.hpp"

namespace slodowy::liealg {

struct SliceChart {
  SL2Triple triple;
  std::vector<ScalarMatrix> kernel_basis;
  std::vector<std::string> coord_names;
  std::vector<int> coord_weights;  // 2 - (ad h eigenvalue)

  std::size_t dim() const { return kernel_basis.size(); }
  exact::Weights weights() const;
  // x + Σ c_i basis_i with symbolic coordinates.
  PolyMatrix general_element() const;
};

// Ker(ad y) split into ad h eigenspaces, highest eigenvalue first; coordinates named c1, c2, ...
SliceChart slodowy_slice(const AlgebraDescriptor& g, const SL2Triple& t);

// Uses a supplied basis after checking it spans Ker(ad y) and consists of ad h eigenvectors.
SliceChart slodowy_slice_with_basis(const AlgebraDescriptor& g, const SL2Triple& t, std::vector<ScalarMatrix> basis,
                                    std::vector<std::string> names);

std::size_t orbit_dim(const AlgebraDescriptor& g, const ScalarMatrix& x);

}  // namespace slodowy::liealg
