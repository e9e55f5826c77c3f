#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hibi {

// Fixed-capacity bitset sized at construction. Used for order ideals,
// element subsets and leq rows; capacity is the lattice/poset size.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t capacity() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bits operator|(const Bits& o) const {
    Bits r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  Bits operator&(const Bits& o) const {
    Bits r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  // Lexicographic on the member list (smaller first member wins).
  bool lex_less(const Bits& o) const {
    auto a = members(), b = o.members();
    return a < b;
  }

  std::vector<int> members() const {
    std::vector<int> r;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) r.push_back(static_cast<int>(i));
    return r;
  }

  static Bits of(std::size_t n, const std::vector<int>& members) {
    Bits r(n);
    for (int m : members) r.set(static_cast<std::size_t>(m));
    return r;
  }

  static Bits full(std::size_t n) {
    Bits r(n);
    for (std::size_t i = 0; i < n; ++i) r.set(i);
    return r;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace hibi
