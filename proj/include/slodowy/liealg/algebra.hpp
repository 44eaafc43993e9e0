#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slodowy/classify/partition.hpp"
#include "slodowy/exact/linalg.hpp"

namespace slodowy::liealg {

using exact::PolyMatrix;
using exact::Scalar;
using exact::ScalarMatrix;
using exact::Vector;

enum class Kind { sl, so, sp };

std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);

struct AlgebraDescriptor {
  Kind family = Kind::sl;
  int matrix_dim = 0;
  std::optional<ScalarMatrix> form;
  int rank = 0;
  std::vector<ScalarMatrix> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const ScalarMatrix& m) const;
  // Coordinates in the stored basis; MembershipError for non-members.
  Vector coords(const ScalarMatrix& m) const;
  ScalarMatrix element(const Vector& c) const;
};

// sl: n is the rank (sl_{n+1}); sp: n is the rank (sp_{2n}); so: n is the matrix dimension.
AlgebraDescriptor make_algebra(Kind k, int n);
AlgebraDescriptor make_algebra_with_form(Kind k, const ScalarMatrix& form);

// Antidiagonal ones (symmetric) and antidiagonal +..+,-..- (skew).
ScalarMatrix standard_symmetric_form(int m);
ScalarMatrix standard_skew_form(int m);

ScalarMatrix bracket(const AlgebraDescriptor& g, const ScalarMatrix& x, const ScalarMatrix& y);
ScalarMatrix ad_operator(const ScalarMatrix& z, const AlgebraDescriptor& g);

// NotNilpotentError unless x^dim = 0.
classify::Partition jordan_type(const ScalarMatrix& x);
std::vector<std::size_t> power_ranks(const ScalarMatrix& x);

}  // namespace slodowy::liealg
