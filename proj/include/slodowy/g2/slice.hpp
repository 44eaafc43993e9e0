#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slodowy/exact/mpoly.hpp"
#include "slodowy/g2/g2.hpp"

namespace slodowy::g2 {

struct G2Triple {
  G2Elt x, h, y;
};

// x = E12, h = diag(1,−1,0), y = E21 in the sl3 block.
G2Triple minimal_triple();

// Slice element in coordinates a,b,c,p,q,r,s,u:
//   A = [[−b/2, 1, 0], [u, −b/2, p], [s, 0, b]], v = (0, 2q, c)ᵀ, w = (2r, 0, a).
G2Elt slice_element();
// The element as printed, A = [[b/2,1,0],[u,b/2,p],[s,0,−b]], v = (0,2q,a)ᵀ, w = (2r,0,c);
// it is slice_element() after a ↔ c, b ↦ −b.
G2Elt printed_slice_element();

struct Chi6Reading {
  std::string label;  // e.g. "t4=z1,t5=-z2"
  bool holds = false;
};

struct G2SliceData {
  G2Elt xi;
  exact::Weights weights;
  MPoly t1, t2, t3, z1, z2, f;
  MPoly chi2, chi6;
  // Readings of the undefined t4, t5 tried in order; the first that holds is used.
  std::vector<Chi6Reading> readings;
  std::optional<std::string> passing_reading;
  std::size_t kernel_dim = 0;
};

// Checks the triple, [y, ξ − x] = 0 and dim Ker ad y = 8; throws IdentityError on failure.
G2SliceData g2_slice_minimal();

// Right-hand side of the χ6(ξ) identity for a given (t4, t5).
MPoly chi6_identity_rhs(const G2SliceData& d, const MPoly& t4, const MPoly& t5);

// −2·χ6(ξ) at u = ¾(ac − b²); IdentityError unless it equals f.
MPoly g2_hypersurface();

struct CertificateEntry {
  std::string var;
  bool found = false;
  long bound = 0;
  std::vector<MPoly> cofactors;  // against t1, t2, t3, z1, z2
};

struct SingularLocusReport {
  std::vector<CertificateEntry> entries;
  bool all_found() const;
};

// Membership of every ∂f/∂var in (t1, t2, t3, z1, z2) with cofactor weight ≤ bound, raising the bound to 12.
SingularLocusReport g2_singular_locus_check(long bound);

struct S3ModelReport {
  bool found = false;
  exact::Scalar kappa2, kappa3;  // scale on the degree 2 and degree 3 polarizations
  std::size_t candidates_tried = 0;
  std::vector<std::pair<std::string, MPoly>> invariants;  // a..s after scaling
  std::vector<std::pair<std::string, MPoly>> relations;   // t1..z2 after substitution
};

// Polarizations of e2, e3 on X = (x1, x2, −x1−x2), Y = (y1, y2, −y1−y2), scaled per degree by
// rationals with numerator and denominator at most bound.
S3ModelReport s3_invariant_model_check(long bound = 12);

}  // namespace slodowy::g2
