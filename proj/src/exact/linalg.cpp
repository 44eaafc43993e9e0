#include "slodowy/exact/linalg.hpp"

#include <sstream>

namespace slodowy::exact {

PolyMatrix to_poly(const ScalarMatrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = MPoly(m(i, j));
  return p;
}

ScalarMatrix to_scalar(const PolyMatrix& m) {
  ScalarMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto c = m(i, j).as_constant();
      if (!c) throw StructureError("matrix entry is not constant: " + m(i, j).to_string());
      s(i, j) = *c;
    }
  return s;
}

ScalarMatrix evaluate(const PolyMatrix& m, const std::map<std::string, Scalar>& values) {
  PolyMatrix e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).evaluate(values);
  return to_scalar(e);
}

PolyMatrix unify_env(const PolyMatrix& m) {
  VarListPtr env = MPoly().env();
  for (const auto& v : m.data()) env = union_env(env, v.env());
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).with_vars(env);
  return out;
}

std::string to_string(const ScalarMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

std::string to_string(const PolyMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

Rref rref(ScalarMatrix a) {
  Rref out;
  std::size_t row = 0;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && a(piv, col).is_zero()) ++piv;
    if (piv == nr) continue;
    if (piv != row)
      for (std::size_t j = 0; j < nc; ++j) std::swap(a(piv, j), a(row, j));
    Scalar inv = a(row, col).inverse();
    for (std::size_t j = col; j < nc; ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Scalar f = a(i, col);
      for (std::size_t j = col; j < nc; ++j) {
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const ScalarMatrix& a) { return rref(a).pivots.size(); }

std::vector<Vector> kernel_basis(const ScalarMatrix& a) {
  Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const ScalarMatrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side length differs from row count");
  ScalarMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref r = rref(std::move(aug));
  LinearSolution sol;
  sol.kernel = kernel_basis(a);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return sol;
  Vector x(a.cols(), Scalar(0));
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced(k, a.cols());
  sol.particular = std::move(x);
  return sol;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  ScalarMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(std::move(aug));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

Scalar determinant(const ScalarMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
  ScalarMatrix m = a;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      Scalar f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

// Berkowitz: peel the leading row/column off repeatedly, multiplying by a Toeplitz matrix.
template <class T>
std::vector<T> charpoly_coefficients(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {T(1)};
  std::vector<T> v{T(1), -m(n - 1, n - 1)};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t s = n - k;  // size of the current trailing block
    std::vector<T> t(s + 1, T(0));
    t[0] = T(1);
    t[1] = -m(k, k);
    std::vector<T> u(s - 1, T(0));
    for (std::size_t i = 0; i + 1 < s; ++i) u[i] = m(k + 1 + i, k);
    for (std::size_t j = 2; j <= s; ++j) {
      T ru(0);
      for (std::size_t i = 0; i + 1 < s; ++i) {
        if (!u[i].is_zero() && !m(k, k + 1 + i).is_zero()) ru += m(k, k + 1 + i) * u[i];
      }
      t[j] = -ru;
      if (j == s) break;
      std::vector<T> next(s - 1, T(0));
      for (std::size_t r = 0; r + 1 < s; ++r)
        for (std::size_t c = 0; c + 1 < s; ++c) {
          const T& a = m(k + 1 + r, k + 1 + c);
          if (!a.is_zero() && !u[c].is_zero()) next[r] += a * u[c];
        }
      u = std::move(next);
    }
    std::vector<T> w(s + 1, T(0));
    for (std::size_t i = 0; i <= s; ++i)
      for (std::size_t j = 0; j <= std::min(i, s - 1); ++j) {
        if (!t[i - j].is_zero() && !v[j].is_zero()) w[i] += t[i - j] * v[j];
      }
    v = std::move(w);
  }
  return v;
}

namespace {

template <class T>
T pfaffian_rec(const Matrix<T>& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return T(1);
  std::size_t first = idx[0];
  T total(0);
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const T& entry = m(first, idx[j]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    T sub = pfaffian_rec(m, rest);
    if (j % 2 == 1) {
      total += entry * sub;
    } else {
      total -= entry * sub;
    }
  }
  return total;
}

}  // namespace

template <class T>
T pfaffian(const Matrix<T>& m) {
  if (!m.is_square() || m.rows() % 2 != 0) throw StructureError("pfaffian needs an even-dimensional square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (!(m(i, j) == -m(j, i))) throw StructureError("pfaffian of a matrix that is not skew-symmetric");
    }
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_rec(m, idx);
}

template std::vector<Scalar> charpoly_coefficients(const ScalarMatrix&);
template std::vector<MPoly> charpoly_coefficients(const PolyMatrix&);
template Scalar pfaffian(const ScalarMatrix&);
template MPoly pfaffian(const PolyMatrix&);

MPoly charpoly(const PolyMatrix& m, const std::string& lambda) {
  PolyMatrix u = unify_env(m);
  VarListPtr base = u.rows() ? u(0, 0).env() : MPoly().env();
  if (std::find(base->begin(), base->end(), lambda) != base->end())
    throw InputError("characteristic variable " + lambda + " already used by the matrix");
  auto coeffs = charpoly_coefficients(u);
  VarList names = *base;
  names.push_back(lambda);
  VarListPtr env = make_env(std::move(names));
  MPoly lam = MPoly::variable(env, env->size() - 1);
  MPoly result = MPoly::constant(env, 0);
  const auto n = static_cast<unsigned>(u.rows());
  for (unsigned k = 0; k <= n; ++k) result += coeffs[k].with_vars(env) * pow(lam, n - k);
  return result;
}

MPoly charpoly(const ScalarMatrix& m, const std::string& lambda) { return charpoly(to_poly(m), lambda); }

MPoly determinant(const PolyMatrix& m) {
  auto c = charpoly_coefficients(unify_env(m));
  MPoly d = c.back();
  return m.rows() % 2 == 0 ? d : -d;
}

}  // namespace slodowy::exact
