#pragma once

#include <gmpxx.h>

#include <vector>

#include "hibi/lattice.hpp"

namespace hibi {

using Rational = mpq_class;

// Integer vector over the J-indexed character basis {f_z} (or the dual
// basis {e_y} on the N side).
using ExponentVector = std::vector<long>;

// x_a x_b - x_join x_meet, one per diamond.
struct BinomialRelation {
  Index a, b, join, meet;
};

// A point of affine space A^{#L}, one exact rational coordinate per
// lattice element.
struct VarietyPoint {
  std::vector<Rational> coords;
};

std::vector<BinomialRelation> binomial_relations(const Lattice& l);

// f_{I_alpha} for each alpha in element order: the 0/1 indicator of the
// Birkhoff ideal over J.
std::vector<ExponentVector> semigroup_generators(const Lattice& l);

// Generators of the cone sigma in N: {e_z : z maximal in the poset J}
// together with {e_y - e_{y'} : (y,y') a cover in J}, deduplicated.
std::vector<ExponentVector> cone_generators(const Lattice& l);

// The distinguished point P_D: coordinate 1 on D, 0 elsewhere. D must be
// an embedded sublattice (or empty); NotEmbedded otherwise.
VarietyPoint distinguished_point(const Lattice& l, const Bits& d);

// True iff every binomial relation vanishes at p (exact arithmetic).
bool on_variety(const Lattice& l, const VarietyPoint& p);

// Elements with a nonzero coordinate. NotOnVariety when p fails the
// relations; InternalError when the support is not embedded (asserted,
// never silently accepted).
Bits support(const Lattice& l, const VarietyPoint& p);

}  // namespace hibi
