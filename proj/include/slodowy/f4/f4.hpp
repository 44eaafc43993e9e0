#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "slodowy/exact/matrix.hpp"

namespace slodowy::f4 {

using SimpleCoords = std::array<int, 4>;  // (a,b,c,d) for aα1 + bα2 + cα3 + dα4
using Doubled = std::array<int, 4>;       // twice the Euclidean coordinates

struct RootSystemF4 {
  std::vector<SimpleCoords> roots;
  std::vector<Doubled> euclidean;  // parallel to roots
  std::array<Doubled, 4> simple_roots;

  std::size_t long_count() const;
  std::size_t short_count() const;
  std::size_t positive_count() const;
  SimpleCoords highest_root() const;
  int index_of(const SimpleCoords& r) const;  // −1 if not a root
};

// Bourbaki realization: α1 = e2−e3, α2 = e3−e4, α3 = e4, α4 = ½(e1−e2−e3−e4).
RootSystemF4 f4_roots();

int norm2(const Doubled& v);  // 4·|v|² in Euclidean units
int pairing(const Doubled& a, const Doubled& b);
// ⟨β, α∨⟩ = 2(β,α)/(α,α)
int coroot_pairing(const Doubled& beta, const Doubled& alpha);
Doubled reflect(const Doubled& beta, const Doubled& alpha);

struct GradedF4 {
  std::array<int, 4> weights{0, 2, 0, 2};
  std::map<SimpleCoords, int> grade_of_root;
  std::map<int, int> dims;
  std::vector<SimpleCoords> roots_of_grade(int k) const;
};

GradedF4 f4_grading();

// Bi-weights (⟨β,α1∨⟩, ⟨β,α3∨⟩) of the grade 2 roots, sorted.
std::vector<std::pair<int, int>> grade2_biweights();

struct SL2SL2Module {
  // Weight vectors: V3 (2), then V1 ⊗ S²V3 (6).
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> biweights;
  exact::ScalarMatrix e1, e3;  // raising operators of sl2(α1), sl2(α3)
  std::size_t dim() const { return labels.size(); }
};

SL2SL2Module grade2_module();
// Sorted bi-weights of V3 ⊕ (V1 ⊗ S²V3).
std::vector<std::pair<int, int>> module_biweights();

struct InvariantHyperplane {
  std::vector<exact::Scalar> functional;  // the hyperplane is its kernel
  std::pair<int, int> bidegree;           // weight of the functional in the dual module
  bool invariant = false;                 // both raising operators preserve the kernel
};

// Lines in the dual annihilated by both raising operators, one per weight.
std::vector<InvariantHyperplane> f4_invariant_hyperplanes();

struct BettiReport {
  int base = 2;                          // b2 of P¹ × P¹
  std::vector<int> component_counts;     // connected components of each X_U
  std::vector<std::pair<int, int>> bidegrees;
  int b2 = 0;
};

// Zero loci of nonzero sections of O(0,1), O(1,2) on P¹×P¹ are connected; taken as given.
BettiReport f4_betti_subsubregular();

}  // namespace slodowy::f4
