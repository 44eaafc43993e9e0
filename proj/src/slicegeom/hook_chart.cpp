#include "slodowy/slicegeom/hook_chart.hpp"

#include <gmpxx.h>

namespace slodowy::slicegeom {

using exact::Scalar;
using exact::ScalarMatrix;

namespace {

mpz_class factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

}  // namespace

std::vector<std::string> hook_elimination_order(int n) {
  std::vector<std::string> out;
  for (int j = 1; j < n; ++j) out.push_back("t" + std::to_string(j));
  return out;
}

HookModel symplectic_hook_model(int n) {
  if (n < 2) throw InputError("the hook model needs n >= 2");
  const int m = 2 * n - 2;
  const auto N = static_cast<std::size_t>(2 * n);
  auto jm = liealg::jm_triple(liealg::Kind::sp, classify::make_partition({m, 1, 1}));
  const auto& y = jm.triple.y;
  const auto um = static_cast<std::size_t>(m);

  std::vector<ScalarMatrix> basis;
  std::vector<std::string> names;
  auto unit = [&](std::size_t i, std::size_t j, const Scalar& v) {
    ScalarMatrix e(N, N);
    e(i, j) = v;
    return e;
  };
  names = {"a", "b", "x", "y", "z"};
  basis.push_back(unit(um - 1, um + 1, 1) + unit(um, 0, -1));
  basis.push_back(unit(um - 1, um, 1) + unit(um + 1, 0, 1));
  basis.push_back(unit(um + 1, um, 1));
  basis.push_back(unit(um, um, 1) + unit(um + 1, um + 1, -1));
  basis.push_back(unit(um, um + 1, -1));
  // t_j multiplies y^{2j−1}, scaled so that its entry in row m−1, column m−2j is 1.
  ScalarMatrix ypow = y;
  for (int j = 1; j < n; ++j) {
    if (j > 1) ypow = ypow * y * y;
    Scalar pivot = ypow(um - 1, static_cast<std::size_t>(m - 2 * j));
    basis.push_back(ypow * pivot.inverse());
    names.push_back("t" + std::to_string(j));
  }
  HookModel out;
  out.n = n;
  out.chart = liealg::slodowy_slice_with_basis(jm.algebra, jm.triple, std::move(basis), std::move(names));
  out.algebra = std::move(jm.algebra);
  return out;
}

MPoly hook_linear_part(int n) {
  auto env = exact::make_env({"a", "b", "x", "y", "z"});
  auto v = [&](const char* s) { return MPoly::variable(env, s); };
  MPoly a = v("a"), b = v("b"), x = v("x"), y = v("y"), z = v("z");
  return (a * a * x + MPoly(2) * a * b * y + b * b * z) * Scalar(mpq_class(factorial(2 * n - 3)));
}

MPoly hook_expected_f(int n) {
  auto env = exact::make_env({"a", "b", "x", "y", "z"});
  MPoly x = MPoly::variable(env, "x"), y = MPoly::variable(env, "y"), z = MPoly::variable(env, "z");
  return hook_linear_part(n) - exact::pow(x * z - y * y, static_cast<unsigned>(n));
}

FactorizationCheck hook_factorization(const HookModel& model, const SliceInvariants& inv) {
  const int n = model.n;
  auto env = inv.chi.env();
  MPoly lam = MPoly::variable(env, kLambda);
  MPoly x = MPoly::variable(env, "x"), y = MPoly::variable(env, "y"), z = MPoly::variable(env, "z");
  MPoly divisor = lam * lam + x * z - y * y;
  auto div = exact::divide_by_monic(inv.chi - hook_linear_part(n), divisor, kLambda);
  FactorizationCheck out;
  out.quotient = div.quotient;
  out.remainder = div.remainder;
  const auto m = static_cast<std::size_t>(2 * n - 2);
  exact::PolyMatrix s = model.chart.general_element();
  out.block_charpoly = exact::charpoly(s.block(0, 0, m, m), kLambda);
  out.holds = out.remainder.is_zero() && out.quotient == out.block_charpoly;
  return out;
}

}  // namespace slodowy::slicegeom
