#include "hibi/faces.hpp"

#include <algorithm>
#include <functional>

#include "hibi/error.hpp"

namespace hibi {

bool is_embedded_sublattice(const Lattice& l, const Bits& d,
                            std::pair<Index, Index>* witness) {
  // Join/meet closure.
  auto mem = d.members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j) {
      if (!d.test(l.join(mem[i], mem[j])) || !d.test(l.meet(mem[i], mem[j]))) {
        if (witness) *witness = {mem[i], mem[j]};
        return false;
      }
    }
  // Embedded condition over all non-comparable pairs of L.
  for (const auto& dm : l.diamonds()) {
    if (d.test(dm.join) && d.test(dm.meet) &&
        !(d.test(dm.skew_lo) && d.test(dm.skew_hi))) {
      if (witness) *witness = {dm.skew_lo, dm.skew_hi};
      return false;
    }
  }
  return true;
}

namespace {

// Covers of the induced poset on D: (x,y) with x < y and no element of D
// strictly between.
std::vector<Cover> induced_covers(const Lattice& l, const Bits& d) {
  auto mem = d.members();
  std::vector<Cover> cv;
  for (Index x : mem)
    for (Index y : mem) {
      if (x == y || !l.poset().leq(x, y)) continue;
      bool direct = true;
      for (Index z : mem)
        if (z != x && z != y && l.poset().leq(x, z) && l.poset().leq(z, y)) {
          direct = false;
          break;
        }
      if (direct) cv.emplace_back(x, y);
    }
  return cv;
}

}  // namespace

Face make_face(const Lattice& l, const Bits& d) {
  Face f;
  f.lattice = &l;
  f.D = d;
  f.point = distinguished_point(l, d);
  if (!d.any()) {
    f.orbit_dim = 0;
  } else {
    // Maximal chain cardinality of D; D is itself distributive so any
    // chain works. Longest cover-path from min(D) to max(D), plus one.
    auto mem = d.members();
    Index bot = mem[0];
    for (Index m : mem) bot = l.meet(bot, m);
    auto cv = induced_covers(l, d);
    std::vector<int> depth(l.size(), -1);
    depth[bot] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [x, y] : cv)
        if (depth[x] >= 0 && depth[x] + 1 > depth[y]) {
          depth[y] = depth[x] + 1;
          changed = true;
        }
    }
    Index top = mem[0];
    for (Index m : mem) top = l.join(top, m);
    f.orbit_dim = depth[top] + 1;
  }
  f.cone_dim = l.dim() - f.orbit_dim;
  return f;
}

std::vector<Face> enumerate_faces(const Lattice& l, std::optional<std::size_t> cap) {
  const int n = l.size();
  // Closure operator: smallest sublattice (join/meet-closed set)
  // containing s. The empty set is closed.
  auto close = [&](Bits s) {
    bool grew = true;
    while (grew) {
      grew = false;
      auto mem = s.members();
      for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j) {
          Index jn = l.join(mem[i], mem[j]), mt = l.meet(mem[i], mem[j]);
          if (!s.test(jn)) { s.set(jn); grew = true; }
          if (!s.test(mt)) { s.set(mt); grew = true; }
        }
    }
    return s;
  };

  std::vector<Bits> closed;
  // Next-closure enumeration in lectic order, starting from close(empty).
  Bits a = close(Bits(n));
  closed.push_back(a);
  const Bits full = Bits::full(n);
  while (!(a == full)) {
    bool advanced = false;
    for (int i = n - 1; i >= 0; --i) {
      if (a.test(i)) continue;
      Bits s(n);
      for (int k = 0; k < i; ++k)
        if (a.test(k)) s.set(k);
      s.set(i);
      Bits b = close(s);
      // Lectic successor test: b must not add anything below i.
      bool ok = true;
      for (int k = 0; k < i; ++k)
        if (b.test(k) && !a.test(k)) { ok = false; break; }
      if (ok) {
        a = b;
        closed.push_back(a);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;  // no successor: the full set was not closed? cannot happen
  }

  std::vector<Face> out;
  for (const auto& s : closed) {
    if (!is_embedded_sublattice(l, s)) continue;
    if (cap && out.size() >= *cap)
      throw error(errc::limit_exceeded, "face enumeration cap exceeded");
    out.push_back(make_face(l, s));
  }
  std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
    auto cx = x.D.count(), cy = y.D.count();
    if (cx != cy) return cx < cy;
    return x.D.lex_less(y.D);
  });
  return out;
}

bool closure_contains(const Face& f, const Face& g) {
  if (f.lattice != g.lattice)
    throw error(errc::lattice_mismatch, "faces belong to different lattices");
  return g.D.subset_of(f.D);
}

std::vector<std::vector<Index>> sublattice_maximal_chains(
    const Lattice& l, const Bits& d, std::optional<std::size_t> cap) {
  if (!d.any()) return {{}};
  auto mem = d.members();
  Index bot = mem[0], top = mem[0];
  for (Index m : mem) { bot = l.meet(bot, m); top = l.join(top, m); }
  auto cv = induced_covers(l, d);
  std::vector<std::vector<Index>> ups(l.size());
  for (const auto& [x, y] : cv) ups[x].push_back(y);
  for (auto& u : ups) std::sort(u.begin(), u.end());

  std::vector<std::vector<Index>> out;
  std::vector<Index> chain{bot};
  std::function<void()> rec = [&]() {
    Index cur = chain.back();
    if (cur == top) {
      if (cap && out.size() >= *cap)
        throw error(errc::limit_exceeded, "sublattice chain cap exceeded");
      out.push_back(chain);
      return;
    }
    for (Index nxt : ups[cur]) {
      chain.push_back(nxt);
      rec();
      chain.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace hibi
