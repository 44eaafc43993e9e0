#pragma once

// Reference computations kept independent of the library's algorithms.

#include <random>
#include <string>
#include <vector>

#include "slodowy/exact/matrix.hpp"

namespace oracle {

using slodowy::exact::Matrix;
using slodowy::exact::MPoly;
using slodowy::exact::Scalar;
using slodowy::exact::ScalarMatrix;

// Laplace expansion along the first row.
template <class T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    T term = m(0, j) * cofactor_det(minor);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

inline ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
  ScalarMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline ScalarMatrix random_matrix(std::size_t r, std::size_t c, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-bound, bound);
  ScalarMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline ScalarMatrix random_skew(std::size_t n, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-bound, bound);
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = d(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

// Random polynomial text over the given variables, with rational and sqrt2 coefficients.
inline std::string random_poly_text(const std::vector<std::string>& vars, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), coef(-9, 9), den(1, 5), ex(0, 3), kind(0, 3);
  std::string s;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    int c = coef(rng);
    if (c == 0) c = 1;
    std::string term = "(" + std::to_string(c) + "/" + std::to_string(den(rng));
    if (kind(rng) == 0) term += " + " + std::to_string(coef(rng)) + "*sqrt2";
    term += ")";
    for (const auto& v : vars) {
      int e = ex(rng);
      if (e > 0) term += "*" + v + "^" + std::to_string(e);
    }
    s += (t ? " + " : "") + term;
  }
  return s.empty() ? "0" : s;
}

}  // namespace oracle
