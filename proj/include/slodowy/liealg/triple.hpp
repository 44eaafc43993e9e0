#pragma once

#include "slodowy/liealg/algebra.hpp"

namespace slodowy::liealg {

struct SL2Triple {
  ScalarMatrix x;
  ScalarMatrix h;
  ScalarMatrix y;
};

// StructureError naming the first failed relation or membership.
void check_triple(const AlgebraDescriptor& g, const SL2Triple& t);

struct JMResult {
  AlgebraDescriptor algebra;  // carries the form adapted to the block decomposition
  SL2Triple triple;
};

// Direct sum of irreducible sl2 blocks, in the order of the parts. For so/sp, blocks of the
// parts that must pair get a hyperbolic form; the rest carry the invariant form
// (-1)^{i+1}/binom(m-1,i) on the antidiagonal.
JMResult jm_triple(Kind k, const classify::Partition& d);

// Irreducible block of size m and its invariant form.
SL2Triple irreducible_block(int m);
ScalarMatrix block_form(int m);

}  // namespace slodowy::liealg
