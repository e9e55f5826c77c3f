#pragma once

#include <gmpxx.h>

#include <vector>

#include "hibi/toric.hpp"

namespace hibi {

// Dense exact rational matrix. Rank uses fraction-free (Bareiss)
// elimination over the integers after clearing row denominators; kernel
// bases come from a rational RREF. No floating point anywhere.
class RationalMatrix {
public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::size_t rank() const;

  // Spanning set of the right kernel; size() == cols() - rank().
  std::vector<std::vector<Rational>> kernel_basis() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// One row per binomial relation, entries are the partial derivatives
// evaluated at p. NotOnVariety when p fails the relations.
RationalMatrix jacobian_at(const Lattice& l, const VarietyPoint& p);

// #L - rank(Jacobian at P_D). NotEmbedded when D is not embedded.
int tangent_dim_oracle(const Lattice& l, const Bits& d);

// Rank of the #L x #J matrix of semigroup generators; equals #J.
int semigroup_rank_oracle(const Lattice& l);

}  // namespace hibi
