#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hibi/bits.hpp"

namespace hibi {

using Index = int;

// A cover pair, stored as (lower, upper).
using Cover = std::pair<Index, Index>;

// Finite poset over dense integer indices. Element names live at the
// boundary only; the order relation is a precomputed bit matrix, covers
// are the transitive reduction. Immutable after construction.
class Poset {
public:
  // Builds from named covers. leq is the reflexive-transitive closure;
  // redundant input covers are dropped (the stored covers are the
  // transitive reduction). Throws CycleDetected / UnknownElement.
  static Poset from_covers(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  // Same, with index pairs referring to positions in `elements`.
  static Poset from_cover_indices(std::vector<std::string> elements,
                                  const std::vector<Cover>& covers);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Index i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  Index index_of(const std::string& name) const;  // UnknownElement

  bool leq(Index a, Index b) const { return up_[a].test(b); }
  bool comparable(Index a, Index b) const { return leq(a, b) || leq(b, a); }

  // {z : a <= z} and {z : z <= a} as bit rows.
  const Bits& up_set(Index a) const { return up_[a]; }
  const Bits& down_set(Index a) const { return down_[a]; }

  const std::vector<Cover>& covers() const { return covers_; }

  bool bounded() const { return minimum_.has_value() && maximum_.has_value(); }
  Index minimum() const;  // NotALattice-free accessor; throws internal if unbounded
  Index maximum() const;

  // Rank of [minimum, x]; NotGraded when maximal chains in the interval
  // disagree in length.
  int level(Index x) const;

  // All saturated chains from minimum to maximum, lexicographic in element
  // index order. LimitExceeded past `cap`.
  std::vector<std::vector<Index>> maximal_chains(
      std::optional<std::size_t> cap = std::nullopt) const;

  // All order ideals (downward-closed subsets), deterministic order.
  std::vector<Bits> order_ideals(std::optional<std::size_t> cap = std::nullopt) const;

  // Lower covers of x (elements x covers), ascending.
  std::vector<Index> lower_covers(Index x) const;
  std::vector<Index> upper_covers(Index x) const;

private:
  std::vector<std::string> names_;
  std::vector<Bits> up_;    // up_[a] = {b : a <= b}
  std::vector<Bits> down_;  // down_[a] = {b : b <= a}
  std::vector<Cover> covers_;
  std::optional<Index> minimum_, maximum_;
};

}  // namespace hibi
