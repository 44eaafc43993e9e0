#include "slodowy/exact/elimination.hpp"

#include "slodowy/errors.hpp"
#include "slodowy/exact/linalg.hpp"

namespace slodowy::exact {

EliminationResult eliminate_triangular(const std::vector<MPoly>& equations, const std::vector<std::string>& solve_vars) {
  if (equations.size() < solve_vars.size()) throw InputError("fewer equations than variables to solve for");
  EliminationResult out;
  std::map<std::string, MPoly> subs;
  for (std::size_t i = 0; i < solve_vars.size(); ++i) {
    const std::string& v = solve_vars[i];
    MPoly e = equations[i].substitute(subs);
    auto lead = e.coefficient(v, 1).as_constant();
    if (e.degree_in(v) != 1 || !lead || lead->is_zero()) {
      throw NotTriangularizableError("equation " + std::to_string(i) + " is not linear in " + v +
                                     " with a constant leading coefficient: " + e.to_string());
    }
    MPoly sol = -(e.coefficient(v, 0)) * lead->inverse();
    for (auto& [name, value] : subs) value = value.substitute({{v, sol}});
    subs.emplace(v, sol);
    out.substitutions.emplace_back(v, sol);
  }
  for (auto& [name, value] : out.substitutions) value = subs.at(name);
  for (std::size_t i = 0; i < solve_vars.size(); ++i) {
    MPoly r = equations[i].substitute(subs);
    if (!r.is_zero()) throw IdentityError("solved equation does not vanish after back-substitution", r.to_string());
  }
  for (std::size_t i = solve_vars.size(); i < equations.size(); ++i) out.residuals.push_back(equations[i].substitute(subs));
  return out;
}

namespace {

void enumerate(const VarList& vars, const std::vector<int>& w, std::size_t pos, long remaining, Exponents& cur,
               std::vector<Exponents>& out) {
  if (pos == vars.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (long e = 0; e * w[pos] <= remaining; ++e) {
    cur[pos] = static_cast<std::uint32_t>(e);
    enumerate(vars, w, pos + 1, remaining - e * w[pos], cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_weight(const VarList& vars, const Weights& weights, long degree) {
  std::vector<int> w;
  for (const auto& v : vars) {
    auto it = weights.find(v);
    if (it == weights.end()) throw InputError("no weight declared for variable " + v);
    if (it->second <= 0) throw InputError("bounded ideal membership needs positive weights; " + v + " has weight " +
                                          std::to_string(it->second));
    w.push_back(it->second);
  }
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents cur(vars.size(), 0);
  enumerate(vars, w, 0, degree, cur, out);
  return out;
}

namespace {

// One linear solve: find cofactors h_i built from the given monomial lists with Σ h_i gens_i = target.
std::optional<std::vector<MPoly>> solve_ansatz(const MPoly& target, const std::vector<MPoly>& gens,
                                               const std::vector<std::vector<Exponents>>& monos, const VarListPtr& env) {
  std::map<Exponents, std::size_t, GrevlexGreater> row_of;
  auto row = [&](const Exponents& e) {
    auto [it, inserted] = row_of.try_emplace(e, row_of.size());
    return it->second;
  };
  struct Entry {
    std::size_t r, c;
    Scalar v;
  };
  std::vector<Entry> entries;
  std::size_t col = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& m : monos[i]) {
      for (const auto& [e, c] : gens[i].terms()) {
        Exponents s = e;
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += m[k];
        entries.push_back({row(s), col, c});
      }
      ++col;
    }
  }
  for (const auto& [e, c] : target.terms()) row(e);
  if (col == 0) {
    if (target.is_zero()) return std::vector<MPoly>(gens.size(), MPoly::constant(env, 0));
    return std::nullopt;
  }
  ScalarMatrix a(row_of.size(), col);
  for (const auto& en : entries) a(en.r, en.c) += en.v;
  Vector b(row_of.size(), Scalar(0));
  for (const auto& [e, c] : target.terms()) b[row_of.at(e)] = c;
  auto sol = solve_linear(a, b);
  if (!sol.particular) return std::nullopt;
  std::vector<MPoly> cof;
  std::size_t k = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    MPoly::TermMap t;
    for (const auto& m : monos[i]) {
      const Scalar& v = (*sol.particular)[k++];
      if (!v.is_zero()) t.emplace(m, v);
    }
    cof.push_back(MPoly::from_terms(env, std::move(t)));
  }
  return cof;
}

}  // namespace

std::optional<std::vector<MPoly>> ideal_membership_bounded(const MPoly& g, const std::vector<MPoly>& gens,
                                                           const Weights& weights, long bound) {
  VarListPtr env = g.env();
  for (const auto& p : gens) env = union_env(env, p.env());
  MPoly target = g.with_vars(env);
  std::vector<MPoly> gs;
  for (const auto& p : gens) gs.push_back(p.with_vars(env));

  bool homogeneous = true;
  std::vector<long> gdeg;
  for (const auto& p : gs) {
    auto d = p.weighted_degree(weights);
    if (!d && !p.is_zero()) homogeneous = false;
    gdeg.push_back(d.value_or(0));
  }

  std::vector<MPoly> total(gs.size(), MPoly::constant(env, 0));
  if (homogeneous) {
    // Graded pieces decouple: solve each weighted component of g separately.
    for (const auto& [deg, part] : target.weighted_components(weights)) {
      std::vector<std::vector<Exponents>> monos(gs.size());
      for (std::size_t i = 0; i < gs.size(); ++i) {
        long need = deg - gdeg[i];
        if (gs[i].is_zero() || need < 0 || need > bound) continue;
        monos[i] = monomials_of_weight(*env, weights, need);
      }
      auto cof = solve_ansatz(part, gs, monos, env);
      if (!cof) return std::nullopt;
      for (std::size_t i = 0; i < gs.size(); ++i) total[i] += (*cof)[i];
    }
  } else {
    std::vector<std::vector<Exponents>> monos(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (gs[i].is_zero()) continue;
      for (long d = 0; d <= bound; ++d) {
        auto m = monomials_of_weight(*env, weights, d);
        monos[i].insert(monos[i].end(), m.begin(), m.end());
      }
    }
    auto cof = solve_ansatz(target, gs, monos, env);
    if (!cof) return std::nullopt;
    total = std::move(*cof);
  }

  MPoly check = -target;
  for (std::size_t i = 0; i < gs.size(); ++i) check += total[i] * gs[i];
  if (!check.is_zero()) throw IdentityError("cofactor certificate does not re-expand", check.to_string());
  return total;
}

}  // namespace slodowy::exact
