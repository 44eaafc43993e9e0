#include "slodowy/slicegeom/invariants.hpp"

namespace slodowy::slicegeom {

exact::Weights invariant_weights(const SliceChart& chart) {
  auto w = chart.weights();
  w[kLambda] = 2;
  return w;
}

SliceInvariants restrict_invariants(const SliceChart& chart, const AlgebraDescriptor& g) {
  SliceInvariants inv;
  inv.chart = chart;
  exact::PolyMatrix s = chart.general_element();
  inv.coefficients = exact::charpoly_coefficients(s);
  auto env = exact::make_env([&] {
    auto names = chart.coord_names;
    names.push_back(kLambda);
    return names;
  }());
  MPoly lam = MPoly::variable(env, kLambda);
  inv.chi = MPoly::constant(env, 0);
  const auto n = static_cast<unsigned>(inv.coefficients.size() - 1);
  for (unsigned k = 0; k <= n; ++k) {
    inv.coefficients[k] = inv.coefficients[k].with_vars(env);
    inv.chi += inv.coefficients[k] * exact::pow(lam, n - k);
  }
  if (g.family == liealg::Kind::so && g.matrix_dim % 2 == 0) {
    exact::PolyMatrix gs = exact::to_poly(*g.form) * s;
    inv.pfaff = exact::pfaffian(exact::unify_env(gs));
  }
  return inv;
}

bool chi_quasi_homogeneous(const SliceInvariants& inv) {
  auto w = invariant_weights(inv.chart);
  auto d = inv.chi.weighted_degree(w);
  return d && *d == 2L * static_cast<long>(inv.chart.triple.x.rows());
}

}  // namespace slodowy::slicegeom
