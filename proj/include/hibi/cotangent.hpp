#pragma once

#include <optional>
#include <vector>

#include "hibi/faces.hpp"

namespace hibi {

// One cotangent-basis label: a chain element gamma or an equivalence-class
// representative xi.
struct BasisLabel {
  enum Kind { chain, cls } kind;
  Index element;
};

struct CotangentReport {
  Bits D;                                // the embedded sublattice
  std::vector<Index> gamma;              // maximal chain in D (empty iff D empty)
  Bits lambda;                           // Lambda_tau(Gamma)
  Bits e_set;                            // E_tau
  std::vector<std::vector<Index>> classes;  // partition of L \ D, by min element
  std::vector<int> g_class_ids;          // indices into classes, the G classes
  std::vector<Index> g_reps;             // min element of each G class
  std::vector<BasisLabel> basis_labels;
  int tangent_dim = 0;                   // #G + #Gamma
  bool smooth = false;                   // tangent_dim == dim(L)
};

// {alpha : alpha comparable to every element of gamma}; all of L when
// gamma is empty. GammaNotMaximalChain when gamma is not a maximal chain
// of the sublattice D.
Bits lambda_set(const Lattice& l, const Bits& d, const std::vector<Index>& gamma);

// Elements alpha outside D paired diagonally with some beta in D in a
// diamond meeting D exactly in {beta}.
Bits e_set(const Lattice& l, const Bits& d);

// Finest partition of L \ D merging theta, delta whenever {theta, delta}
// is one side of a diamond whose opposite side lies inside D. Classes are
// sorted by their minimum element.
std::vector<std::vector<Index>> equivalence_classes(const Lattice& l, const Bits& d);

// Full report; gamma defaults to the lexicographically-first maximal
// chain of D.
CotangentReport cotangent_report(
    const Lattice& l, const Bits& d,
    const std::optional<std::vector<Index>>& gamma = std::nullopt);

}  // namespace hibi
