#include <doctest.h>

#include <algorithm>

#include "hibi/error.hpp"
#include "hibi/poset.hpp"

using namespace hibi;

namespace {

Poset chain3() {
  return Poset::from_covers({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
}

Poset diamond() {
  return Poset::from_covers({"0", "a", "b", "1"},
                            {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

// Brute-force reflexive-transitive closure from raw cover pairs.
std::vector<std::vector<bool>> closure_oracle(int n, const std::vector<Cover>& cv) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) r[i][i] = true;
  for (auto& [a, b] : cv) r[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

}  // namespace

TEST_CASE("singleton poset") {
  auto p = Poset::from_covers({"a"}, {});
  CHECK(p.size() == 1);
  CHECK(p.leq(0, 0));
  CHECK(p.covers().empty());
}

TEST_CASE("3-chain closure has 6 pairs") {
  auto p = chain3();
  int pairs = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (p.leq(a, b)) ++pairs;
  CHECK(pairs == 6);
}

TEST_CASE("diamond: transitive closure matches brute force, (0,1) not a cover") {
  auto p = diamond();
  auto oracle = closure_oracle(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(p.leq(a, b) == oracle[a][b]);
  CHECK(p.leq(0, 3));
  for (auto& [lo, hi] : p.covers()) CHECK(!(lo == 0 && hi == 3));
}

TEST_CASE("redundant input covers are dropped") {
  auto p = Poset::from_covers({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}});
  CHECK(p.covers().size() == 2);
}

TEST_CASE("cycle and dangling references rejected") {
  CHECK_THROWS_AS(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), error);
  CHECK_THROWS_AS(Poset::from_covers({"a"}, {{"a", "z"}}), error);
  CHECK_THROWS_AS(Poset::from_covers({"a", "a"}, {}), error);
}

TEST_CASE("levels") {
  auto c = chain3();
  CHECK(c.level(2) == 2);
  auto d = diamond();
  CHECK(d.level(3) == 2);
  CHECK(d.level(1) == 1);
}

TEST_CASE("non-graded interval reports NotGraded") {
  // 0 < a < b < 1 and 0 < c < 1: chains to the top have lengths 3 and 2.
  auto p = Poset::from_covers({"0", "a", "b", "c", "1"},
                              {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  CHECK_THROWS_AS(p.level(p.index_of("1")), error);
}

TEST_CASE("maximal chains") {
  CHECK(chain3().maximal_chains() == std::vector<std::vector<Index>>{{0, 1, 2}});
  auto d = diamond();
  auto ch = d.maximal_chains();
  REQUIRE(ch.size() == 2);
  CHECK(ch[0] == std::vector<Index>{0, 1, 3});
  CHECK(ch[1] == std::vector<Index>{0, 2, 3});
  CHECK_THROWS_AS(d.maximal_chains(1), error);
}

TEST_CASE("4x4 grid poset has binomial(6,3) = 20 maximal chains") {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> cv;
  auto nm = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      names.push_back(nm(i, j));
      if (i < 3) cv.emplace_back(nm(i, j), nm(i + 1, j));
      if (j < 3) cv.emplace_back(nm(i, j), nm(i, j + 1));
    }
  auto p = Poset::from_covers(names, cv);
  CHECK(p.maximal_chains().size() == 20);
}

TEST_CASE("order ideals: counts and closure under union/intersection") {
  auto anti = Poset::from_covers({"x", "y"}, {});
  CHECK(anti.order_ideals().size() == 4);
  CHECK(chain3().order_ideals().size() == 4);

  auto grid22 = Poset::from_covers({"00", "01", "10", "11"},
                                   {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
  auto ideals = grid22.order_ideals();
  CHECK(ideals.size() == 6);

  // Brute-force filter over all subsets agrees.
  int count = 0;
  for (int mask = 0; mask < 16; ++mask) {
    bool down_closed = true;
    for (int a = 0; a < 4 && down_closed; ++a)
      for (int b = 0; b < 4; ++b)
        if ((mask >> b) & 1 && grid22.leq(a, b) && !((mask >> a) & 1)) {
          down_closed = false;
          break;
        }
    if (down_closed) ++count;
  }
  CHECK(count == 6);

  for (const auto& a : ideals)
    for (const auto& b : ideals) {
      CHECK(std::find(ideals.begin(), ideals.end(), a | b) != ideals.end());
      CHECK(std::find(ideals.begin(), ideals.end(), a & b) != ideals.end());
    }
  CHECK_THROWS_AS(grid22.order_ideals(3), error);
}

TEST_CASE("graded bounded poset: level(max)+1 equals every maximal chain size") {
  auto d = diamond();
  for (const auto& ch : d.maximal_chains())
    CHECK(ch.size() == static_cast<std::size_t>(d.level(d.maximum()) + 1));
}
