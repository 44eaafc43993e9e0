#include "slodowy/liealg/algebra.hpp"

namespace slodowy::liealg {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::sl: return "sl";
    case Kind::so: return "so";
    case Kind::sp: return "sp";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  if (s == "sl") return Kind::sl;
  if (s == "so") return Kind::so;
  if (s == "sp") return Kind::sp;
  throw InputError("unknown matrix family: " + s);
}

namespace {

ScalarMatrix unit(int m, int i, int j) {
  ScalarMatrix e(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  e(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
  return e;
}

}  // namespace

ScalarMatrix standard_symmetric_form(int m) {
  ScalarMatrix g(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) g(static_cast<std::size_t>(i), static_cast<std::size_t>(m - 1 - i)) = 1;
  return g;
}

ScalarMatrix standard_skew_form(int m) {
  if (m % 2 != 0) throw InputError("skew form needs even dimension");
  ScalarMatrix g(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) g(static_cast<std::size_t>(i), static_cast<std::size_t>(m - 1 - i)) = i < m / 2 ? 1 : -1;
  return g;
}

AlgebraDescriptor make_algebra(Kind k, int n) {
  if (n < 1) throw InputError("algebra parameter must be >= 1");
  switch (k) {
    case Kind::sl: {
      AlgebraDescriptor g;
      g.family = Kind::sl;
      g.matrix_dim = n + 1;
      g.rank = n;
      const int m = n + 1;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (i != j) g.basis.push_back(unit(m, i, j));
      for (int i = 0; i + 1 < m; ++i) g.basis.push_back(unit(m, i, i) - unit(m, i + 1, i + 1));
      return g;
    }
    case Kind::sp: return make_algebra_with_form(Kind::sp, standard_skew_form(2 * n));
    case Kind::so:
      if (n < 2) throw InputError("so needs matrix dimension >= 2");
      return make_algebra_with_form(Kind::so, standard_symmetric_form(n));
  }
  throw InputError("unsupported family");
}

AlgebraDescriptor make_algebra_with_form(Kind k, const ScalarMatrix& form) {
  if (k == Kind::sl) throw InputError("sl carries no form");
  if (!form.is_square()) throw DimensionError("form must be square");
  const int m = static_cast<int>(form.rows());
  if (k == Kind::sp && !(form.transpose() == -form)) throw StructureError("sp form must be skew");
  if (k == Kind::so && !(form.transpose() == form)) throw StructureError("so form must be symmetric");
  auto inv = exact::inverse(form);
  if (!inv) throw StructureError("form must be invertible");
  AlgebraDescriptor g;
  g.family = k;
  g.matrix_dim = m;
  g.form = form;
  g.rank = m / 2;
  // M = G^{-1} S with S skew (so) or symmetric (sp).
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      if (k == Kind::so && i == j) continue;
      ScalarMatrix s = k == Kind::so ? unit(m, i, j) - unit(m, j, i) : unit(m, i, j) + unit(m, j, i);
      g.basis.push_back(*inv * s);
    }
  return g;
}

bool AlgebraDescriptor::contains(const ScalarMatrix& x) const {
  if (x.rows() != static_cast<std::size_t>(matrix_dim) || x.cols() != static_cast<std::size_t>(matrix_dim))
    return false;
  if (family == Kind::sl) return x.trace().is_zero();
  return (x.transpose() * *form + *form * x).is_zero();
}

Vector AlgebraDescriptor::coords(const ScalarMatrix& x) const {
  if (!contains(x)) throw MembershipError("matrix is not in " + kind_name(family) + std::to_string(matrix_dim));
  const auto m = static_cast<std::size_t>(matrix_dim);
  Vector c;
  c.reserve(basis.size());
  if (family == Kind::sl) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j) c.push_back(x(i, j));
    Scalar running(0);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      running += x(i, i);
      c.push_back(running);
    }
    return c;
  }
  ScalarMatrix s = *form * x;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      if (family == Kind::so && i == j) continue;
      c.push_back(i == j ? s(i, j) * Scalar::fraction(1, 2) : s(i, j));
    }
  return c;
}

ScalarMatrix AlgebraDescriptor::element(const Vector& c) const {
  if (c.size() != basis.size()) throw DimensionError("coordinate vector length differs from algebra dimension");
  const auto m = static_cast<std::size_t>(matrix_dim);
  ScalarMatrix x(m, m);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) x += basis[k] * c[k];
  return x;
}

ScalarMatrix bracket(const AlgebraDescriptor& g, const ScalarMatrix& x, const ScalarMatrix& y) {
  if (!g.contains(x) || !g.contains(y)) throw MembershipError("bracket arguments must lie in the algebra");
  return exact::commutator(x, y);
}

ScalarMatrix ad_operator(const ScalarMatrix& z, const AlgebraDescriptor& g) {
  if (!g.contains(z)) throw MembershipError("ad of a non-member");
  ScalarMatrix ad(g.dim(), g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    Vector c = g.coords(exact::commutator(z, g.basis[j]));
    for (std::size_t i = 0; i < g.dim(); ++i) ad(i, j) = c[i];
  }
  return ad;
}

std::vector<std::size_t> power_ranks(const ScalarMatrix& x) {
  std::vector<std::size_t> r{x.rows()};
  ScalarMatrix p = ScalarMatrix::identity(x.rows());
  while (r.back() > 0 && r.size() <= x.rows() + 1) {
    p = p * x;
    r.push_back(exact::rank(p));
  }
  if (r.back() != 0) throw NotNilpotentError("matrix is not nilpotent");
  return r;
}

classify::Partition jordan_type(const ScalarMatrix& x) {
  if (!x.is_square()) throw DimensionError("Jordan type of a non-square matrix");
  auto r = power_ranks(x);
  auto at = [&](std::size_t k) -> long { return k < r.size() ? static_cast<long>(r[k]) : 0L; };
  std::vector<int> parts;
  for (std::size_t j = r.size(); j >= 1; --j) {
    long mult = at(j - 1) - 2 * at(j) + at(j + 1);
    for (long k = 0; k < mult; ++k) parts.push_back(static_cast<int>(j));
  }
  return classify::make_partition(std::move(parts));
}

}  // namespace slodowy::liealg
