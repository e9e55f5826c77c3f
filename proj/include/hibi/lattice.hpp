#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

// A diamond: a non-comparable pair together with its join and meet.
// (skew_lo, skew_hi) is the skew diagonal, (join, meet) the main diagonal.
struct Diamond {
  Index skew_lo;  // smaller index of the non-comparable pair
  Index skew_hi;
  Index join;
  Index meet;
};

// Finite distributive lattice: a poset plus cached join/meet tables, the
// join-irreducibles J (convention: the minimum element belongs to J) and
// the Birkhoff ideal map alpha -> {z in J : z <= alpha}.
// Immutable after construction; all queries are read-only.
class Lattice {
public:
  // Validates that p is a bounded distributive lattice: every pair must
  // have a least upper / greatest lower bound, and both distributive
  // identities are checked exhaustively (a witness triple is reported).
  static Lattice from_poset(Poset p);

  // Birkhoff: the lattice of order ideals of an arbitrary finite poset p
  // (read as the poset of nonzero join-irreducibles), ordered by
  // inclusion. LimitExceeded past `cap` elements.
  static Lattice from_irreducibles(const Poset& p,
                                   std::optional<std::size_t> cap = std::nullopt);

  // chain:n | boolean:n | grid:AxB | subsets:d,n
  static Lattice family(const std::string& descriptor);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  Index bottom() const { return poset_.minimum(); }
  Index top() const { return poset_.maximum(); }

  Index join(Index a, Index b) const { return join_[a * size() + b]; }
  Index meet(Index a, Index b) const { return meet_[a * size() + b]; }

  // J in canonical (element index) order; includes the bottom element.
  const std::vector<Index>& irreducibles() const { return irr_; }
  std::vector<Index> nonzero_irreducibles() const;
  int dim() const { return static_cast<int>(irr_.size()); }

  // Position of z in the J ordering, -1 when z is not join-irreducible.
  int irr_pos(Index z) const { return irr_pos_[z]; }

  // Birkhoff ideal I_alpha as bits over positions in irreducibles().
  const Bits& ideal_of(Index alpha) const { return ideal_[alpha]; }

  // All diamonds, one per unordered non-comparable pair, ordered by
  // (skew_lo, skew_hi).
  const std::vector<Diamond>& diamonds() const { return diamonds_; }

  // The unique beta in J with I_upper \ I_lower = {beta}. NotACover when
  // (upper, lower) is not a cover.
  Index cover_irreducible(Index upper, Index lower) const;

private:
  Poset poset_;
  std::vector<Index> join_, meet_;  // n*n tables
  std::vector<Index> irr_;
  std::vector<int> irr_pos_;
  std::vector<Bits> ideal_;
  std::vector<Diamond> diamonds_;
};

}  // namespace hibi
