#include <cstdlib>

#include "slodowy/slicegeom/hypersurface.hpp"

namespace slodowy::slicegeom {

namespace {

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Diagonalizes a by unimodular row ops (recorded in u) and column ops (recorded in v): u·a0·v = a.
void smith_diagonalize(IntMatrix& a, IntMatrix& u, IntMatrix& v) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  u = identity(rows);
  v = identity(cols);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (bi == rows || std::labs(a[i][j]) < std::labs(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) return;
    swap_rows(t, bi);
    swap_cols(t, bj);
    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        long q = a[i][t] / a[t][t];
        if (q == 0) continue;
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[t][j];
        for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[t][j];
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        long q = a[t][j] / a[t][t];
        if (q == 0) continue;
        for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
        for (std::size_t i = 0; i < cols; ++i) v[i][j] -= q * v[i][t];
      }
      bool moved = false;
      for (std::size_t i = t + 1; i < rows && !moved; ++i)
        if (a[i][t] != 0) {
          swap_rows(t, i);
          moved = true;
        }
      for (std::size_t j = t + 1; j < cols && !moved; ++j)
        if (a[t][j] != 0) {
          swap_cols(t, j);
          moved = true;
        }
      if (!moved) break;
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }
}

mpq_class rational_pow(const mpq_class& base, long e) {
  mpq_class out(1);
  mpq_class b = e < 0 ? mpq_class(1 / base) : base;
  for (long k = 0; k < std::labs(e); ++k) out *= b;
  out.canonicalize();
  return out;
}

std::optional<mpq_class> rational_root(const mpq_class& r, long d) {
  if (d == 1) return r;
  if (r < 0 && d % 2 == 0) return std::nullopt;
  mpz_class num = r.get_num();
  mpz_class den = r.get_den();
  mpz_class rn, rd;
  bool neg = num < 0;
  if (neg) num = -num;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(d))) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(d))) return std::nullopt;
  mpq_class out(neg ? mpz_class(-rn) : rn, rd);
  out.canonicalize();
  return out;
}

}  // namespace

NormalizationResult normalize_to(const MPoly& f, const MPoly& target) {
  NormalizationResult res;
  auto env = exact::union_env(f.trimmed().env(), target.trimmed().env());
  MPoly fe = f.with_vars(env);
  MPoly te = target.with_vars(env);
  const std::size_t nv = env->size();

  if (fe.num_terms() != te.num_terms()) {
    res.obstruction = "monomial supports differ";
    return res;
  }
  IntMatrix e;
  std::vector<mpq_class> ratio;
  for (const auto& [mono, tc] : te.terms()) {
    auto it = fe.terms().find(mono);
    if (it == fe.terms().end()) {
      res.obstruction = "monomial supports differ";
      return res;
    }
    if (!tc.is_rational() || !it->second.is_rational()) {
      res.obstruction = "coefficients outside Q";
      return res;
    }
    std::vector<long> row(nv + 1);
    for (std::size_t k = 0; k < nv; ++k) row[k] = static_cast<long>(mono[k]);
    row[nv] = 1;  // the overall factor
    e.push_back(std::move(row));
    ratio.push_back(tc.rational_part() / it->second.rational_part());
  }

  IntMatrix d = e, u, v;
  smith_diagonalize(d, u, v);
  const std::size_t rows = d.size();
  const std::size_t cols = nv + 1;
  std::vector<mpq_class> w(cols, mpq_class(1));
  for (std::size_t i = 0; i < rows; ++i) {
    mpq_class r(1);
    for (std::size_t m = 0; m < rows; ++m)
      if (u[i][m] != 0) r *= rational_pow(ratio[m], u[i][m]);
    long di = i < cols ? d[i][i] : 0;
    if (di == 0) {
      if (r != 1) {
        res.obstruction = "inconsistent scaling system: a monomial relation forces " + r.get_str() + " = 1";
        return res;
      }
      continue;
    }
    auto root = rational_root(r, di);
    if (!root) {
      res.obstruction = "needs the " + std::to_string(di) + "-th root of " + r.get_str() + " (no rational root)";
      return res;
    }
    w[i] = *root;
  }
  std::vector<mpq_class> scale(cols, mpq_class(1));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < cols; ++i)
      if (v[j][i] != 0) scale[j] *= rational_pow(w[i], v[j][i]);

  std::map<std::string, MPoly> subs;
  for (std::size_t k = 0; k < nv; ++k) {
    res.rescaling.scale[(*env)[k]] = exact::Scalar(scale[k]);
    subs[(*env)[k]] = MPoly::variable(env, k) * exact::Scalar(scale[k]);
  }
  res.rescaling.overall = exact::Scalar(scale[nv]);
  res.g = fe.substitute(subs) * res.rescaling.overall;
  if (!(res.g == te)) throw IdentityError("rescaled polynomial differs from the target", (res.g - te).to_string());
  res.found = true;
  return res;
}

}  // namespace slodowy::slicegeom
