#include "hibi/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hibi/error.hpp"

namespace hibi {

Poset Poset::from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, Index> idx;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!idx.emplace(elements[i], static_cast<Index>(i)).second)
      throw error(errc::unknown_element,
                  "duplicate element identifier '" + elements[i] + "'");
  }
  std::vector<Cover> cv;
  cv.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end())
      throw error(errc::unknown_element, "unknown element '" + lo + "' in cover");
    if (b == idx.end())
      throw error(errc::unknown_element, "unknown element '" + hi + "' in cover");
    cv.emplace_back(a->second, b->second);
  }
  return from_cover_indices(std::move(elements), cv);
}

Poset Poset::from_cover_indices(std::vector<std::string> elements,
                                const std::vector<Cover>& covers) {
  const int n = static_cast<int>(elements.size());
  {
    std::map<std::string, int> seen;
    for (const auto& e : elements)
      if (++seen[e] > 1)
        throw error(errc::unknown_element, "duplicate element identifier '" + e + "'");
  }
  for (const auto& [lo, hi] : covers)
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw error(errc::unknown_element, "cover index out of range");

  Poset p;
  p.names_ = std::move(elements);
  p.up_.assign(n, Bits(n));
  for (Index i = 0; i < n; ++i) p.up_[i].set(i);
  for (const auto& [lo, hi] : covers) p.up_[lo].set(hi);

  // Reflexive-transitive closure (Warshall on bit rows).
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      if (p.up_[i].test(k)) p.up_[i] = p.up_[i] | p.up_[k];

  // Antisymmetry: a cycle shows up as i <= j <= i with i != j.
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (p.up_[i].test(j) && p.up_[j].test(i))
        throw error(errc::cycle_detected,
                    "cycle through '" + p.names_[i] + "' and '" + p.names_[j] + "'");

  p.down_.assign(n, Bits(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (p.up_[i].test(j)) p.down_[j].set(i);

  // Transitive reduction: (a,b) is a cover iff a < b with nothing between.
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (a == b || !p.up_[a].test(b)) continue;
      bool direct = true;
      for (Index z = 0; z < n && direct; ++z)
        if (z != a && z != b && p.up_[a].test(z) && p.up_[z].test(b)) direct = false;
      if (direct) p.covers_.emplace_back(a, b);
    }

  for (Index i = 0; i < n; ++i) {
    if (p.down_[i].count() == static_cast<std::size_t>(n)) p.maximum_ = i;
    if (p.up_[i].count() == static_cast<std::size_t>(n)) p.minimum_ = i;
  }
  return p;
}

Index Poset::index_of(const std::string& name) const {
  for (Index i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw error(errc::unknown_element, "unknown element '" + name + "'");
}

Index Poset::minimum() const {
  if (!minimum_) throw error(errc::internal, "poset has no unique minimum");
  return *minimum_;
}

Index Poset::maximum() const {
  if (!maximum_) throw error(errc::internal, "poset has no unique maximum");
  return *maximum_;
}

std::vector<Index> Poset::lower_covers(Index x) const {
  std::vector<Index> r;
  for (const auto& [lo, hi] : covers_)
    if (hi == x) r.push_back(lo);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<Index> Poset::upper_covers(Index x) const {
  std::vector<Index> r;
  for (const auto& [lo, hi] : covers_)
    if (lo == x) r.push_back(hi);
  std::sort(r.begin(), r.end());
  return r;
}

int Poset::level(Index x) const {
  if (!minimum_)
    throw error(errc::not_graded, "level requires a unique minimum element");
  // Longest and shortest cover-path length from the minimum, within the
  // interval [min, x]. Cover paths there use exactly the global covers with
  // both ends <= x.
  const int n = size();
  std::vector<int> lo(n, -1), hi(n, -1);
  lo[*minimum_] = hi[*minimum_] = 0;
  // Elements of the interval in a linear extension (index order refined by
  // repeated passes; a simple relaxation over covers suffices on a DAG).
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : covers_) {
      if (!leq(b, x) || lo[a] < 0) continue;
      if (lo[b] < 0 || lo[a] + 1 < lo[b]) { lo[b] = lo[a] + 1; changed = true; }
      if (hi[a] + 1 > hi[b]) { hi[b] = hi[a] + 1; changed = true; }
    }
  }
  if (lo[x] < 0) throw error(errc::internal, "element not above the minimum");
  if (lo[x] != hi[x])
    throw error(errc::not_graded, "maximal chains from the minimum to '" +
                                      names_[x] + "' have different lengths");
  return lo[x];
}

std::vector<std::vector<Index>> Poset::maximal_chains(
    std::optional<std::size_t> cap) const {
  if (!bounded())
    throw error(errc::internal, "maximal chains require a bounded poset");
  std::vector<std::vector<Index>> out;
  std::vector<Index> chain{minimum()};
  const Index top = maximum();

  // Iterative DFS over upper covers, smallest index first.
  struct Frame { std::vector<Index> next; std::size_t pos; };
  std::vector<Frame> stack;
  stack.push_back({upper_covers(minimum()), 0});
  while (!stack.empty()) {
    auto& f = stack.back();
    if (chain.back() == top) {
      if (cap && out.size() >= *cap)
        throw error(errc::limit_exceeded, "maximal chain cap exceeded");
      out.push_back(chain);
      stack.pop_back();
      chain.pop_back();
      continue;
    }
    if (f.pos >= f.next.size()) {
      stack.pop_back();
      chain.pop_back();
      continue;
    }
    Index nxt = f.next[f.pos++];
    chain.push_back(nxt);
    stack.push_back({upper_covers(nxt), 0});
  }
  return out;
}

std::vector<Bits> Poset::order_ideals(std::optional<std::size_t> cap) const {
  const int n = size();
  // Linear extension: stable sort of indices by down-set size keeps the
  // recursion valid (every element after all it dominates).
  std::vector<Index> order(n);
  for (Index i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return down_[a].count() < down_[b].count();
  });

  // Backtracking over the linear extension: an element may enter only when
  // all its lower covers are already in, so each ideal is hit exactly once.
  Bits cur(n);
  std::vector<Bits> acc;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      if (cap && acc.size() >= *cap)
        throw error(errc::limit_exceeded, "order ideal cap exceeded");
      acc.push_back(cur);
      return;
    }
    Index x = order[k];
    rec(k + 1);  // exclude x (and everything above stays excludable)
    bool ok = true;
    for (Index y : lower_covers(x))
      if (!cur.test(y)) { ok = false; break; }
    if (ok) {
      cur.set(x);
      rec(k + 1);
      cur.reset(x);
    }
  };
  rec(0);
  // Deterministic order: by size, then lexicographic member list.
  std::sort(acc.begin(), acc.end(), [](const Bits& a, const Bits& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.lex_less(b);
  });
  return acc;
}

}  // namespace hibi
