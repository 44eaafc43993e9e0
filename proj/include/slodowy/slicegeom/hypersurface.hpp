#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slodowy/slicegeom/invariants.hpp"

namespace slodowy::slicegeom {

struct HypersurfaceResult {
  MPoly f;
  std::vector<std::pair<std::string, MPoly>> substitutions;
  std::vector<std::string> surviving_vars;
  // Nonzero non-leading coefficients that were neither solved nor the constant term, reduced.
  std::vector<MPoly> extra_relations;
};

// The nonzero lower coefficients of chi, taken in decreasing λ-degree, are solved for the
// eliminate list in order; f is the constant coefficient after substitution.
HypersurfaceResult derive_hypersurface(const SliceInvariants& inv, const std::vector<std::string>& eliminate);

struct Rescaling {
  std::map<std::string, exact::Scalar> scale;  // v ↦ scale[v]·v
  exact::Scalar overall;                       // g = overall · f(scaled)
};

struct NormalizationResult {
  bool found = false;
  MPoly g;
  Rescaling rescaling;
  std::string obstruction;  // when not found: which radical would be needed
};

// Diagonal rescaling (plus an overall unit) taking f onto target, solved exactly through the
// Smith normal form of the exponent system.
NormalizationResult normalize_to(const MPoly& f, const MPoly& target);

// a²x + 2aby + b²z + (xz − y²)^n
MPoly hook_normal_form(int n);
NormalizationResult normalize_to_example(const MPoly& f, int n);

}  // namespace slodowy::slicegeom
