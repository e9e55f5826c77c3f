#include "hibi/linalg.hpp"

#include "hibi/error.hpp"
#include "hibi/faces.hpp"

namespace hibi {

std::size_t RationalMatrix::rank() const {
  // Clear denominators row by row; rank is unchanged by row scaling.
  std::vector<std::vector<mpz_class>> m(rows_, std::vector<mpz_class>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < cols_; ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              at(r, c).get_den().get_mpz_t());
    for (std::size_t c = 0; c < cols_; ++c) {
      mpq_class scaled = at(r, c) * Rational(lcm);
      m[r][c] = scaled.get_num();  // exact: denominator is 1
    }
  }
  // Bareiss fraction-free elimination with row/column pivoting.
  std::size_t rank = 0;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t piv = row;
    while (piv < rows_ && m[piv][col] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t r = row + 1; r < rows_; ++r) {
      for (std::size_t c = col + 1; c < cols_; ++c) {
        mpz_class t = m[row][col] * m[r][c] - m[r][col] * m[row][c];
        mpz_divexact(m[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = m[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
  // Rational RREF, then one kernel vector per free column.
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);

  std::vector<long> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t piv = row;
    while (piv < rows_ && m[piv][col] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(m[piv], m[row]);
    Rational inv = m[row][col];
    for (std::size_t c = col; c < cols_; ++c) m[row][c] /= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols_; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(static_cast<long>(col));
    ++row;
  }

  std::vector<bool> is_pivot(cols_, false);
  for (long c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
      v[static_cast<std::size_t>(pivot_col[k])] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix jacobian_at(const Lattice& l, const VarietyPoint& p) {
  if (!on_variety(l, p))
    throw error(errc::not_on_variety, "point does not satisfy the binomial relations");
  auto rels = binomial_relations(l);
  RationalMatrix jac(rels.size(), static_cast<std::size_t>(l.size()));
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto& rel = rels[r];
    jac.at(r, rel.a) += p.coords[rel.b];
    jac.at(r, rel.b) += p.coords[rel.a];
    jac.at(r, rel.join) -= p.coords[rel.meet];
    jac.at(r, rel.meet) -= p.coords[rel.join];
  }
  return jac;
}

int tangent_dim_oracle(const Lattice& l, const Bits& d) {
  VarietyPoint p = distinguished_point(l, d);  // NotEmbedded on bad input
  return l.size() - static_cast<int>(jacobian_at(l, p).rank());
}

int semigroup_rank_oracle(const Lattice& l) {
  auto gens = semigroup_generators(l);
  RationalMatrix m(gens.size(), static_cast<std::size_t>(l.dim()));
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < gens[r].size(); ++c)
      m.at(r, c) = static_cast<long>(gens[r][c]);
  return static_cast<int>(m.rank());
}

}  // namespace hibi
