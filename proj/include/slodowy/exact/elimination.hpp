#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slodowy/exact/mpoly.hpp"

namespace slodowy::exact {

struct EliminationResult {
  // In solve order; every value is free of all solve variables.
  std::vector<std::pair<std::string, MPoly>> substitutions;
  // Equations past the solved prefix, reduced by the substitutions.
  std::vector<MPoly> residuals;

  std::map<std::string, MPoly> as_map() const { return {substitutions.begin(), substitutions.end()}; }
};

// Solves equations[i] = 0 for solve_vars[i], i in order; extra equations become residuals.
EliminationResult eliminate_triangular(const std::vector<MPoly>& equations, const std::vector<std::string>& solve_vars);

// Bounded-degree ideal membership via a linear solve over a monomial ansatz.
// Returns cofactors h with g = Σ h_i gens_i and weighted deg h_i ≤ bound, or nullopt.
std::optional<std::vector<MPoly>> ideal_membership_bounded(const MPoly& g, const std::vector<MPoly>& gens,
                                                           const Weights& weights, long bound);

// All exponent vectors over env of exactly the given weighted degree.
std::vector<Exponents> monomials_of_weight(const VarList& vars, const Weights& weights, long degree);

}  // namespace slodowy::exact
