#include "hibi/toric.hpp"

#include <algorithm>

#include "hibi/error.hpp"
#include "hibi/faces.hpp"

namespace hibi {

std::vector<BinomialRelation> binomial_relations(const Lattice& l) {
  std::vector<BinomialRelation> r;
  r.reserve(l.diamonds().size());
  for (const auto& d : l.diamonds())
    r.push_back({d.skew_lo, d.skew_hi, d.join, d.meet});
  return r;
}

std::vector<ExponentVector> semigroup_generators(const Lattice& l) {
  const int d = l.dim();
  std::vector<ExponentVector> out;
  out.reserve(l.size());
  for (Index a = 0; a < l.size(); ++a) {
    ExponentVector v(d, 0);
    for (int k = 0; k < d; ++k)
      if (l.ideal_of(a).test(k)) v[k] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ExponentVector> cone_generators(const Lattice& l) {
  const int d = l.dim();
  const auto& irr = l.irreducibles();
  std::vector<ExponentVector> out;
  // e_z for z maximal in the poset J (no other irreducible above it).
  for (int k = 0; k < d; ++k) {
    bool maximal = true;
    for (int m = 0; m < d; ++m)
      if (m != k && l.poset().leq(irr[k], irr[m])) { maximal = false; break; }
    if (maximal) {
      ExponentVector v(d, 0);
      v[k] = 1;
      out.push_back(std::move(v));
    }
  }
  // e_{y'} - e_y for covers (y, y') in J: y > y' with nothing of J between.
  for (int ky = 0; ky < d; ++ky)
    for (int kz = 0; kz < d; ++kz) {
      if (ky == kz) continue;
      Index y = irr[ky], yp = irr[kz];
      if (!l.poset().leq(yp, y) || yp == y) continue;
      bool cover = true;
      for (int km = 0; km < d && cover; ++km) {
        Index z = irr[km];
        if (z != y && z != yp && l.poset().leq(yp, z) && l.poset().leq(z, y))
          cover = false;
      }
      if (!cover) continue;
      ExponentVector v(d, 0);
      v[kz] = 1;
      v[ky] = -1;
      out.push_back(std::move(v));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VarietyPoint distinguished_point(const Lattice& l, const Bits& d) {
  std::pair<Index, Index> w;
  if (!is_embedded_sublattice(l, d, &w))
    throw error(errc::not_embedded,
                "subset is not an embedded sublattice (witness pair '" +
                    l.poset().name(w.first) + "','" + l.poset().name(w.second) + "')");
  VarietyPoint p;
  p.coords.assign(l.size(), Rational(0));
  for (int m : d.members()) p.coords[m] = 1;
  return p;
}

bool on_variety(const Lattice& l, const VarietyPoint& p) {
  if (static_cast<int>(p.coords.size()) != l.size())
    throw error(errc::not_on_variety, "point has wrong coordinate count");
  for (const auto& d : l.diamonds()) {
    if (p.coords[d.skew_lo] * p.coords[d.skew_hi] !=
        p.coords[d.join] * p.coords[d.meet])
      return false;
  }
  return true;
}

Bits support(const Lattice& l, const VarietyPoint& p) {
  if (!on_variety(l, p))
    throw error(errc::not_on_variety, "point does not satisfy the binomial relations");
  Bits s(l.size());
  for (Index a = 0; a < l.size(); ++a)
    if (p.coords[a] != 0) s.set(a);
  if (!is_embedded_sublattice(l, s))
    throw error(errc::internal,
                "support of a variety point is not an embedded sublattice");
  return s;
}

}  // namespace hibi
