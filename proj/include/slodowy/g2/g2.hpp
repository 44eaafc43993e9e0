#pragma once

#include <string>
#include <vector>

#include "slodowy/exact/linalg.hpp"

namespace slodowy::g2 {

using exact::MPoly;
using exact::PolyMatrix;
using exact::Scalar;
using exact::ScalarMatrix;

// (A, v, w) with A traceless 3×3, v a column, w a row: the Z/3-graded model sl3 ⊕ C³ ⊕ C³*.
struct G2Elt {
  PolyMatrix A{3, 3};
  PolyMatrix v{3, 1};
  PolyMatrix w{1, 3};

  bool is_zero() const { return A.is_zero() && v.is_zero() && w.is_zero(); }
  friend bool operator==(const G2Elt& a, const G2Elt& b) { return a.A == b.A && a.v == b.v && a.w == b.w; }
  G2Elt& operator+=(const G2Elt& o);
  G2Elt& operator-=(const G2Elt& o);
  G2Elt& operator*=(const MPoly& c);
};

G2Elt operator+(G2Elt a, const G2Elt& b);
G2Elt operator-(G2Elt a, const G2Elt& b);
G2Elt operator*(G2Elt a, const MPoly& c);

// E12, E13, E21, E23, E31, E32, diag(1,−1,0), diag(0,1,−1), v1..v3, w1..w3.
std::vector<G2Elt> basis();
std::vector<Scalar> coords(const G2Elt& e);  // constant elements only
G2Elt from_coords(const std::vector<MPoly>& c);
// The element with 14 symbolic coordinates h1 h2 a12 a13 a21 a23 a31 a32 v1 v2 v3 w1 w2 w3.
G2Elt generic_element();

// sl3 part: [A,B] − ¾(vx − ⅓(xv)I) + ¾(uw − ⅓(wu)I)
// C³ part:  Au − Bv + wᵀ×xᵀ
// C³* part: −xA + wB + (v×u)ᵀ
G2Elt bracket(const G2Elt& e1, const G2Elt& e2);

// [[A, v/√2, ½M(wᵀ)], [−w/√2, 0, −vᵀ/√2], [½M(v), wᵀ/√2, −Aᵀ]] with M(v)u = v×u.
PolyMatrix embed_so7(const G2Elt& e);
PolyMatrix cross_matrix(const PolyMatrix& v);

// Symmetric form preserved by the image of embed_so7: [[0,0,I],[0,1,0],[I,0,0]].
ScalarMatrix invariant_form_g7();
// All symmetric G with ρ(e)ᵀG + Gρ(e) = 0 for every basis e, as a kernel basis.
std::vector<ScalarMatrix> solve_invariant_forms();

struct Invariants {
  MPoly chi2;
  MPoly chi6;
};

Invariants closed_form_invariants(const G2Elt& e);
// Coefficients of t^5 and t in det(t − ρ(e)).
Invariants charpoly_invariants(const G2Elt& e);
// Both ways; IdentityError if they differ or are not rational.
Invariants g2_invariants(const G2Elt& e);

}  // namespace slodowy::g2
