#include "hibi/lattice.hpp"

#include <algorithm>
#include <functional>

#include "hibi/error.hpp"

namespace hibi {

namespace {

// Least element of the nonempty bound set `s`, or -1 when none exists.
Index least_of(const Poset& p, const Bits& s) {
  for (int z : s.members()) {
    bool below_all = true;
    for (int w : s.members())
      if (!p.leq(z, w)) { below_all = false; break; }
    if (below_all) return z;
  }
  return -1;
}

Index greatest_of(const Poset& p, const Bits& s) {
  for (int z : s.members()) {
    bool above_all = true;
    for (int w : s.members())
      if (!p.leq(w, z)) { above_all = false; break; }
    if (above_all) return z;
  }
  return -1;
}

}  // namespace

Lattice Lattice::from_poset(Poset p) {
  const int n = p.size();
  if (n == 0) throw error(errc::not_a_lattice, "empty poset is not a lattice");
  Lattice l;
  l.join_.assign(static_cast<std::size_t>(n) * n, -1);
  l.meet_.assign(static_cast<std::size_t>(n) * n, -1);

  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) {
      Bits ub = p.up_set(a) & p.up_set(b);
      if (!ub.any())
        throw error(errc::not_a_lattice, "pair ('" + p.name(a) + "','" +
                                             p.name(b) + "') has no upper bound");
      Index j = least_of(p, ub);
      if (j < 0)
        throw error(errc::not_a_lattice, "pair ('" + p.name(a) + "','" +
                                             p.name(b) + "') has no least upper bound");
      Bits lb = p.down_set(a) & p.down_set(b);
      if (!lb.any())
        throw error(errc::not_a_lattice, "pair ('" + p.name(a) + "','" +
                                             p.name(b) + "') has no lower bound");
      Index m = greatest_of(p, lb);
      if (m < 0)
        throw error(errc::not_a_lattice,
                    "pair ('" + p.name(a) + "','" + p.name(b) +
                        "') has no greatest lower bound");
      l.join_[a * n + b] = l.join_[b * n + a] = j;
      l.meet_[a * n + b] = l.meet_[b * n + a] = m;
    }

  // Both distributive identities, exhaustively; report a witness triple.
  auto jn = [&](Index x, Index y) { return l.join_[x * n + y]; };
  auto mt = [&](Index x, Index y) { return l.meet_[x * n + y]; };
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        if (mt(x, jn(y, z)) != jn(mt(x, y), mt(x, z)) ||
            jn(x, mt(y, z)) != mt(jn(x, y), jn(x, z)))
          throw error(errc::not_distributive,
                      "distributivity fails at triple ('" + p.name(x) + "','" +
                          p.name(y) + "','" + p.name(z) + "')");
      }

  // Join-irreducibles: z with at most one lower cover (the minimum has
  // none). Equivalent to the definitional scan in a finite lattice.
  std::vector<int> lower_count(n, 0);
  for (const auto& [lo, hi] : p.covers()) lower_count[hi]++;
  l.irr_pos_.assign(n, -1);
  for (Index z = 0; z < n; ++z)
    if (lower_count[z] <= 1) {
      l.irr_pos_[z] = static_cast<int>(l.irr_.size());
      l.irr_.push_back(z);
    }

  const int d = static_cast<int>(l.irr_.size());
  l.ideal_.assign(n, Bits(d));
  for (Index a = 0; a < n; ++a)
    for (int k = 0; k < d; ++k)
      if (p.leq(l.irr_[k], a)) l.ideal_[a].set(k);

  // Structural invariants of the Birkhoff map (internal checks; violation
  // would indicate a construction bug, not bad input).
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (p.leq(a, b) != l.ideal_[a].subset_of(l.ideal_[b]))
        throw error(errc::internal, "Birkhoff map is not order-faithful");
  for (const auto& [lo, hi] : p.covers()) {
    std::size_t diff = l.ideal_[hi].count() - l.ideal_[lo].count();
    if (diff != 1 || !l.ideal_[lo].subset_of(l.ideal_[hi]))
      throw error(errc::internal, "cover without a unique new irreducible");
  }

  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      if (!p.comparable(a, b))
        l.diamonds_.push_back({a, b, l.join_[a * n + b], l.meet_[a * n + b]});

  l.poset_ = std::move(p);
  return l;
}

std::vector<Index> Lattice::nonzero_irreducibles() const {
  std::vector<Index> r;
  for (Index z : irr_)
    if (z != bottom()) r.push_back(z);
  return r;
}

Index Lattice::cover_irreducible(Index upper, Index lower) const {
  bool is_cover = false;
  for (const auto& [lo, hi] : poset_.covers())
    if (lo == lower && hi == upper) { is_cover = true; break; }
  if (!is_cover)
    throw error(errc::not_a_cover, "('" + poset_.name(upper) + "','" +
                                       poset_.name(lower) + "') is not a cover");
  for (int k = 0; k < dim(); ++k)
    if (ideal_[upper].test(k) && !ideal_[lower].test(k)) return irr_[k];
  throw error(errc::internal, "cover with empty ideal difference");
}

Lattice Lattice::from_irreducibles(const Poset& p, std::optional<std::size_t> cap) {
  auto ideals = p.order_ideals(cap);
  std::vector<std::string> names;
  names.reserve(ideals.size());
  for (const auto& id : ideals) {
    std::string s = "{";
    bool first = true;
    for (int m : id.members()) {
      if (!first) s += ",";
      s += p.name(m);
      first = false;
    }
    s += "}";
    names.push_back(s);
  }
  // Covers in the inclusion order: B covers A iff A subset B with exactly
  // one extra element.
  std::vector<Cover> covers;
  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t b = 0; b < ideals.size(); ++b)
      if (a != b && ideals[a].subset_of(ideals[b]) &&
          ideals[b].count() == ideals[a].count() + 1)
        covers.emplace_back(static_cast<Index>(a), static_cast<Index>(b));
  return from_poset(Poset::from_cover_indices(std::move(names), covers));
}

namespace {

Lattice make_chain(int n) {
  if (n < 1) throw error(errc::bad_descriptor, "chain:n needs n >= 1");
  std::vector<std::string> names;
  std::vector<Cover> covers;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Lattice::from_poset(Poset::from_cover_indices(std::move(names), covers));
}

Lattice make_boolean(int n) {
  if (n < 0) throw error(errc::bad_descriptor, "boolean:n needs n >= 0");
  if (n > 8)
    throw error(errc::limit_exceeded, "boolean:n supported for n <= 8");
  const int sz = 1 << n;
  // Element order: by popcount, then numeric mask.
  std::vector<int> masks(sz);
  for (int m = 0; m < sz; ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](int a, int b) {
    int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    if (ca != cb) return ca < cb;
    return a < b;
  });
  std::vector<int> pos(sz);
  for (int i = 0; i < sz; ++i) pos[masks[i]] = i;
  std::vector<std::string> names;
  for (int m : masks) {
    std::string s = "{";
    bool first = true;
    for (int k = 0; k < n; ++k)
      if (m & (1 << k)) {
        if (!first) s += ",";
        s += std::to_string(k + 1);
        first = false;
      }
    s += "}";
    names.push_back(s);
  }
  std::vector<Cover> covers;
  for (int m = 0; m < sz; ++m)
    for (int k = 0; k < n; ++k)
      if (!(m & (1 << k))) covers.emplace_back(pos[m], pos[m | (1 << k)]);
  return Lattice::from_poset(Poset::from_cover_indices(std::move(names), covers));
}

Lattice make_grid(int a, int b) {
  if (a < 1 || b < 1) throw error(errc::bad_descriptor, "grid:AxB needs A,B >= 1");
  if (a * b > 1024) throw error(errc::limit_exceeded, "grid too large");
  std::vector<std::string> names;
  auto at = [&](int i, int j) { return (i - 1) * b + (j - 1); };
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  std::vector<Cover> covers;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      if (i < a) covers.emplace_back(at(i, j), at(i + 1, j));
      if (j < b) covers.emplace_back(at(i, j), at(i, j + 1));
    }
  return Lattice::from_poset(Poset::from_cover_indices(std::move(names), covers));
}

Lattice make_subsets(int d, int n) {
  if (d < 1 || n < d) throw error(errc::bad_descriptor, "subsets:d,n needs 1 <= d <= n");
  if (n > 9) throw error(errc::limit_exceeded, "subsets:d,n supported for n <= 9");
  // d-element subsets of {1..n} as sorted tuples, componentwise order.
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(d);
  std::function<void(int, int)> gen = [&](int k, int lo) {
    if (k == d) { tuples.push_back(cur); return; }
    for (int v = lo; v <= n; ++v) { cur[k] = v; gen(k + 1, v + 1); }
  };
  gen(0, 1);
  std::sort(tuples.begin(), tuples.end());
  std::vector<std::string> names;
  for (const auto& t : tuples) {
    std::string s;
    for (int v : t) s += std::to_string(v);
    names.push_back(s);
  }
  auto leq = [&](const std::vector<int>& x, const std::vector<int>& y) {
    for (int k = 0; k < d; ++k)
      if (x[k] > y[k]) return false;
    return true;
  };
  // Emit the full componentwise relation as "covers"; the transitive
  // reduction inside from_cover_indices drops the redundant ones.
  std::vector<Cover> rel;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (std::size_t j = 0; j < tuples.size(); ++j)
      if (i != j && leq(tuples[i], tuples[j]))
        rel.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
  return Lattice::from_poset(Poset::from_cover_indices(std::move(names), rel));
}

}  // namespace

Lattice Lattice::family(const std::string& descriptor) {
  auto colon = descriptor.find(':');
  if (colon == std::string::npos)
    throw error(errc::bad_descriptor, "bad family descriptor '" + descriptor + "'");
  std::string kind = descriptor.substr(0, colon);
  std::string args = descriptor.substr(colon + 1);
  try {
    if (kind == "chain") return make_chain(std::stoi(args));
    if (kind == "boolean") return make_boolean(std::stoi(args));
    if (kind == "grid") {
      auto x = args.find('x');
      if (x == std::string::npos) throw error(errc::bad_descriptor, "grid:AxB");
      return make_grid(std::stoi(args.substr(0, x)), std::stoi(args.substr(x + 1)));
    }
    if (kind == "subsets") {
      auto comma = args.find(',');
      if (comma == std::string::npos) throw error(errc::bad_descriptor, "subsets:d,n");
      return make_subsets(std::stoi(args.substr(0, comma)),
                          std::stoi(args.substr(comma + 1)));
    }
  } catch (const std::invalid_argument&) {
    throw error(errc::bad_descriptor, "bad family descriptor '" + descriptor + "'");
  } catch (const std::out_of_range&) {
    throw error(errc::bad_descriptor, "bad family descriptor '" + descriptor + "'");
  }
  throw error(errc::bad_descriptor, "unknown family '" + kind + "'");
}

}  // namespace hibi
