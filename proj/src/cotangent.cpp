#include "hibi/cotangent.hpp"

#include <algorithm>
#include <numeric>

#include "hibi/error.hpp"

namespace hibi {

namespace {

void require_embedded(const Lattice& l, const Bits& d) {
  std::pair<Index, Index> w;
  if (!is_embedded_sublattice(l, d, &w))
    throw error(errc::not_embedded,
                "subset is not an embedded sublattice (witness pair '" +
                    l.poset().name(w.first) + "','" + l.poset().name(w.second) + "')");
}

// gamma must run from min(D) to max(D) through covers of the induced
// poset on D.
void require_maximal_chain(const Lattice& l, const Bits& d,
                           const std::vector<Index>& gamma) {
  if (!d.any()) {
    if (!gamma.empty())
      throw error(errc::gamma_not_maximal_chain, "gamma must be empty when D is empty");
    return;
  }
  if (gamma.empty())
    throw error(errc::gamma_not_maximal_chain, "gamma is empty but D is not");
  for (Index g : gamma)
    if (!d.test(g))
      throw error(errc::gamma_not_maximal_chain,
                  "'" + l.poset().name(g) + "' is not in D");
  auto mem = d.members();
  Index bot = mem[0], top = mem[0];
  for (Index m : mem) { bot = l.meet(bot, m); top = l.join(top, m); }
  if (gamma.front() != bot || gamma.back() != top)
    throw error(errc::gamma_not_maximal_chain,
                "gamma does not run from the minimum to the maximum of D");
  for (std::size_t i = 0; i + 1 < gamma.size(); ++i) {
    Index x = gamma[i], y = gamma[i + 1];
    if (!l.poset().leq(x, y) || x == y)
      throw error(errc::gamma_not_maximal_chain, "gamma is not increasing");
    for (Index z : mem)
      if (z != x && z != y && l.poset().leq(x, z) && l.poset().leq(z, y))
        throw error(errc::gamma_not_maximal_chain,
                    "gamma skips '" + l.poset().name(z) + "' in D");
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Bits lambda_set(const Lattice& l, const Bits& d, const std::vector<Index>& gamma) {
  require_embedded(l, d);
  require_maximal_chain(l, d, gamma);
  Bits out(l.size());
  for (Index a = 0; a < l.size(); ++a) {
    bool comparable_all = true;
    for (Index g : gamma)
      if (!l.poset().comparable(a, g)) { comparable_all = false; break; }
    if (comparable_all) out.set(a);
  }
  return out;
}

Bits e_set(const Lattice& l, const Bits& d) {
  require_embedded(l, d);
  Bits out(l.size());
  for (const auto& dm : l.diamonds()) {
    const Index v[4] = {dm.skew_lo, dm.skew_hi, dm.join, dm.meet};
    int inside = 0;
    for (Index x : v) inside += d.test(x) ? 1 : 0;
    if (inside != 1) continue;  // the diamond must meet D in exactly one vertex
    // The diagonal partner of the unique D-vertex is an E element.
    if (d.test(dm.skew_lo)) out.set(dm.skew_hi);
    else if (d.test(dm.skew_hi)) out.set(dm.skew_lo);
    else if (d.test(dm.join)) out.set(dm.meet);
    else out.set(dm.join);
  }
  return out;
}

std::vector<std::vector<Index>> equivalence_classes(const Lattice& l, const Bits& d) {
  require_embedded(l, d);
  const int n = l.size();
  UnionFind uf(n);
  // Sides of a diamond (meet,skew), (skew,join); opposite sides pair the
  // two skew vertices. Merge a side outside D when the opposite side sits
  // inside D.
  for (const auto& dm : l.diamonds()) {
    auto try_merge = [&](Index s1, Index s2, Index o1, Index o2) {
      if (d.test(o1) && d.test(o2) && !d.test(s1) && !d.test(s2)) uf.unite(s1, s2);
    };
    // side {meet, skew_lo} opposite {skew_hi, join}
    try_merge(dm.meet, dm.skew_lo, dm.skew_hi, dm.join);
    try_merge(dm.skew_hi, dm.join, dm.meet, dm.skew_lo);
    // side {meet, skew_hi} opposite {skew_lo, join}
    try_merge(dm.meet, dm.skew_hi, dm.skew_lo, dm.join);
    try_merge(dm.skew_lo, dm.join, dm.meet, dm.skew_hi);
  }
  std::vector<std::vector<Index>> classes;
  std::vector<int> class_of(n, -1);
  for (Index a = 0; a < n; ++a) {
    if (d.test(a)) continue;
    int r = uf.find(a);
    if (class_of[r] < 0) {
      class_of[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[class_of[r]].push_back(a);
  }
  // Members ascend by construction; classes already ordered by min element
  // since elements are visited in index order.
  return classes;
}

CotangentReport cotangent_report(const Lattice& l, const Bits& d,
                                 const std::optional<std::vector<Index>>& gamma_in) {
  require_embedded(l, d);
  CotangentReport r;
  r.D = d;
  if (gamma_in) {
    r.gamma = *gamma_in;
  } else if (d.any()) {
    // Lexicographically-first maximal chain of D: greedy walk from min(D)
    // to max(D) taking the smallest-index upper cover within D.
    auto mem = d.members();
    Index bot = mem[0], top = mem[0];
    for (Index m : mem) { bot = l.meet(bot, m); top = l.join(top, m); }
    Index cur = bot;
    r.gamma.push_back(cur);
    while (cur != top) {
      Index next = -1;
      for (Index y : mem) {
        if (y == cur || !l.poset().leq(cur, y)) continue;
        bool direct = true;
        for (Index z : mem)
          if (z != cur && z != y && l.poset().leq(cur, z) && l.poset().leq(z, y)) {
            direct = false;
            break;
          }
        if (direct) { next = y; break; }  // members ascend, first hit is lex-min
      }
      if (next < 0) throw error(errc::internal, "sublattice chain walk stuck");
      cur = next;
      r.gamma.push_back(cur);
    }
  }
  r.lambda = lambda_set(l, d, r.gamma);
  r.e_set = e_set(l, d);
  r.classes = equivalence_classes(l, d);

  Bits gamma_bits(l.size());
  for (Index g : r.gamma) gamma_bits.set(g);

  // Z = (Lambda \ E) \ Gamma; all of Z lies outside D since the only
  // D-elements comparable to the whole chain are the chain itself.
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    bool meets_z = false, meets_e = false;
    for (Index x : r.classes[c]) {
      if (r.e_set.test(x)) meets_e = true;
      if (r.lambda.test(x) && !r.e_set.test(x) && !gamma_bits.test(x)) meets_z = true;
    }
    if (meets_z && !meets_e) {
      r.g_class_ids.push_back(static_cast<int>(c));
      r.g_reps.push_back(r.classes[c].front());
    }
  }
  for (Index g : r.gamma) r.basis_labels.push_back({BasisLabel::chain, g});
  for (Index x : r.g_reps) r.basis_labels.push_back({BasisLabel::cls, x});
  r.tangent_dim = static_cast<int>(r.g_reps.size() + r.gamma.size());
  r.smooth = (r.tangent_dim == l.dim());
  return r;
}

}  // namespace hibi
