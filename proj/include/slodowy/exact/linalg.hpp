#pragma once

#include <optional>
#include <vector>

#include "slodowy/exact/matrix.hpp"

namespace slodowy::exact {

struct Rref {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(ScalarMatrix a);
std::size_t rank(const ScalarMatrix& a);
std::vector<Vector> kernel_basis(const ScalarMatrix& a);

struct LinearSolution {
  std::optional<Vector> particular;  // nullopt when the system is inconsistent
  std::vector<Vector> kernel;
};

LinearSolution solve_linear(const ScalarMatrix& a, const Vector& b);
std::optional<ScalarMatrix> inverse(const ScalarMatrix& a);
Scalar determinant(const ScalarMatrix& a);

// det(λI − M) coefficients c_0 = 1, c_1, ..., c_n with χ(λ) = Σ c_k λ^{n−k}. Division-free.
template <class T>
std::vector<T> charpoly_coefficients(const Matrix<T>& m);

// Characteristic polynomial as an MPoly in the named fresh variable.
MPoly charpoly(const PolyMatrix& m, const std::string& lambda = "lambda");
MPoly charpoly(const ScalarMatrix& m, const std::string& lambda = "lambda");
MPoly determinant(const PolyMatrix& m);

template <class T>
T pfaffian(const Matrix<T>& m);

extern template std::vector<Scalar> charpoly_coefficients(const ScalarMatrix&);
extern template std::vector<MPoly> charpoly_coefficients(const PolyMatrix&);
extern template Scalar pfaffian(const ScalarMatrix&);
extern template MPoly pfaffian(const PolyMatrix&);

}  // namespace slodowy::exact
