#include "slodowy/slicegeom/hypersurface.hpp"

#include "slodowy/exact/elimination.hpp"

namespace slodowy::slicegeom {

HypersurfaceResult derive_hypersurface(const SliceInvariants& inv, const std::vector<std::string>& eliminate) {
  std::vector<MPoly> lower;
  for (std::size_t k = 1; k + 1 < inv.coefficients.size(); ++k)
    if (!inv.coefficients[k].is_zero()) lower.push_back(inv.coefficients[k]);
  if (lower.size() < eliminate.size())
    throw NotTriangularizableError("only " + std::to_string(lower.size()) + " nonzero coefficients for " +
                                   std::to_string(eliminate.size()) + " variables");
  std::vector<MPoly> eqs(lower.begin(), lower.begin() + static_cast<long>(eliminate.size()));
  for (std::size_t k = eliminate.size(); k < lower.size(); ++k) eqs.push_back(lower[k]);
  eqs.push_back(inv.coefficients.back());

  auto elim = exact::eliminate_triangular(eqs, eliminate);
  HypersurfaceResult out;
  out.substitutions = elim.substitutions;
  out.f = elim.residuals.back().trimmed();
  elim.residuals.pop_back();
  out.extra_relations = std::move(elim.residuals);
  for (const auto& v : inv.chart.coord_names)
    if (std::find(eliminate.begin(), eliminate.end(), v) == eliminate.end()) out.surviving_vars.push_back(v);
  out.f = out.f.with_vars([&] {
    exact::VarList names;
    auto used = out.f.used_vars();
    for (const auto& v : out.surviving_vars)
      if (used.count(v)) names.push_back(v);
    return names;
  }());
  return out;
}

MPoly hook_normal_form(int n) {
  auto env = exact::make_env({"a", "b", "x", "y", "z"});
  auto v = [&](const char* s) { return MPoly::variable(env, s); };
  MPoly a = v("a"), b = v("b"), x = v("x"), y = v("y"), z = v("z");
  return a * a * x + MPoly(2) * a * b * y + b * b * z + exact::pow(x * z - y * y, static_cast<unsigned>(n));
}

NormalizationResult normalize_to_example(const MPoly& f, int n) { return normalize_to(f, hook_normal_form(n)); }

}  // namespace slodowy::slicegeom
