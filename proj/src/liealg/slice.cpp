#include "slodowy/liealg/slice.hpp"

namespace slodowy::liealg {

exact::Weights SliceChart::weights() const {
  exact::Weights w;
  for (std::size_t i = 0; i < coord_names.size(); ++i) w[coord_names[i]] = coord_weights[i];
  return w;
}

PolyMatrix SliceChart::general_element() const {
  auto env = exact::make_env(coord_names);
  PolyMatrix s = exact::to_poly(triple.x);
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) = s(i, j).with_vars(env);
  for (std::size_t k = 0; k < kernel_basis.size(); ++k) {
    exact::MPoly c = exact::MPoly::variable(env, k);
    const auto& b = kernel_basis[k];
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j)
        if (!b(i, j).is_zero()) s(i, j) += c * b(i, j);
  }
  return s;
}

std::size_t orbit_dim(const AlgebraDescriptor& g, const ScalarMatrix& x) {
  return g.dim() - exact::kernel_basis(ad_operator(x, g)).size();
}

SliceChart slodowy_slice(const AlgebraDescriptor& g, const SL2Triple& t) {
  check_triple(g, t);
  ScalarMatrix adh = ad_operator(t.h, g);
  auto kernel = exact::kernel_basis(ad_operator(t.y, g));
  const std::size_t k = kernel.size();
  ScalarMatrix kmat(g.dim(), k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < g.dim(); ++i) kmat(i, j) = kernel[j][i];
  // ad h preserves Ker(ad y); express its restriction in the kernel basis.
  ScalarMatrix image = adh * kmat;
  ScalarMatrix restricted(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    Vector col(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) col[i] = image(i, j);
    auto sol = exact::solve_linear(kmat, col);
    if (!sol.particular) throw StructureError("ad h does not preserve Ker(ad y)");
    for (std::size_t i = 0; i < k; ++i) restricted(i, j) = (*sol.particular)[i];
  }
  SliceChart chart;
  chart.triple = t;
  const long top = 2L * g.matrix_dim;
  // Ker(ad y) holds lowest-weight vectors, so its ad h eigenvalues are <= 0.
  for (long d = 0; d >= -top; --d) {
    ScalarMatrix shifted = restricted - ScalarMatrix::identity(k) * Scalar(d);
    for (const auto& v : exact::kernel_basis(shifted)) {
      Vector full(g.dim(), Scalar(0));
      for (std::size_t j = 0; j < k; ++j)
        if (!v[j].is_zero())
          for (std::size_t i = 0; i < g.dim(); ++i) full[i] += v[j] * kernel[j][i];
      chart.kernel_basis.push_back(g.element(full));
      chart.coord_weights.push_back(static_cast<int>(2 - d));
    }
  }
  if (chart.kernel_basis.size() != k) throw StructureError("ad h does not diagonalize on Ker(ad y)");
  for (std::size_t i = 0; i < k; ++i) chart.coord_names.push_back("c" + std::to_string(i + 1));
  return chart;
}

SliceChart slodowy_slice_with_basis(const AlgebraDescriptor& g, const SL2Triple& t, std::vector<ScalarMatrix> basis,
                                    std::vector<std::string> names) {
  check_triple(g, t);
  if (basis.size() != names.size()) throw InputError("one coordinate name per basis vector");
  const std::size_t kdim = exact::kernel_basis(ad_operator(t.y, g)).size();
  if (basis.size() != kdim)
    throw StructureError("basis has " + std::to_string(basis.size()) + " vectors, Ker(ad y) has dimension " +
                         std::to_string(kdim));
  SliceChart chart;
  chart.triple = t;
  ScalarMatrix coords(g.dim(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& b = basis[k];
    if (!g.contains(b)) throw MembershipError("slice basis vector " + names[k] + " is not in the algebra");
    if (!exact::commutator(t.y, b).is_zero()) throw StructureError("slice basis vector " + names[k] + " does not commute with y");
    ScalarMatrix hb = exact::commutator(t.h, b);
    // Find the eigenvalue from the first nonzero entry, then confirm.
    std::optional<Scalar> ev;
    for (std::size_t i = 0; i < b.rows() && !ev; ++i)
      for (std::size_t j = 0; j < b.cols() && !ev; ++j)
        if (!b(i, j).is_zero()) ev = hb(i, j) / b(i, j);
    if (!ev || !(hb == b * *ev) || !ev->is_rational() || ev->rational_part().get_den() != 1)
      throw StructureError("slice basis vector " + names[k] + " is not an ad h eigenvector");
    chart.coord_weights.push_back(static_cast<int>(2 - ev->rational_part().get_num().get_si()));
    auto c = g.coords(b);
    for (std::size_t i = 0; i < c.size(); ++i) coords(i, k) = c[i];
  }
  if (exact::rank(coords) != basis.size()) throw StructureError("slice basis is linearly dependent");
  chart.kernel_basis = std::move(basis);
  chart.coord_names = std::move(names);
  return chart;
}

}  // namespace slodowy::liealg
