#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hibi/toric.hpp"

namespace hibi {

// A face of the cone sigma, represented by its embedded sublattice D
// (the primary key per the face <-> embedded-sublattice bijection).
struct Face {
  const Lattice* lattice = nullptr;
  Bits D;                      // members over lattice element indices
  VarietyPoint point;          // distinguished point P_D
  int orbit_dim = 0;           // maximal-chain cardinality of D (0 for empty)
  int cone_dim = 0;            // dim(L) - orbit_dim
};

// Definition check: D is join/meet-closed AND every non-comparable pair
// whose join and meet both land in D lies in D. The empty set qualifies.
// On failure `witness` (if given) receives an offending pair.
bool is_embedded_sublattice(const Lattice& l, const Bits& d,
                            std::pair<Index, Index>* witness = nullptr);

Face make_face(const Lattice& l, const Bits& d);

// All embedded sublattices wrapped as faces, by size then lexicographic.
// Generation walks the join/meet-closed sets (next-closure) with the
// embedded predicate as a post-filter. LimitExceeded past `cap`.
std::vector<Face> enumerate_faces(const Lattice& l,
                                  std::optional<std::size_t> cap = std::nullopt);

// Orbit-closure order: the orbit of g lies in the closure of the orbit
// of f iff g.D is contained in f.D. LatticeMismatch across lattices.
bool closure_contains(const Face& f, const Face& g);

// Maximal chains of the sublattice D (as an induced poset), lexicographic.
// Returns {{}} when D is empty.
std::vector<std::vector<Index>> sublattice_maximal_chains(
    const Lattice& l, const Bits& d,
    std::optional<std::size_t> cap = std::nullopt);

}  // namespace hibi
