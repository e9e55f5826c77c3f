// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hibi/cotangent.hpp"
#include "hibi/error.hpp"
#include "hibi/linalg.hpp"
#include "hibi/reports.hpp"
#include "hibi/singular.hpp"

using namespace hibi;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  (%s)\n", criterion, ok ? "PASS" : "FAIL",
              detail.c_str());
  if (!ok) ++failures;
}

Bits by_names(const Lattice& l, const std::vector<std::string>& names) {
  Bits d(l.size());
  for (const auto& n : names) d.set(l.poset().index_of(n));
  return d;
}

const std::vector<std::string>& named_families() {
  static const std::vector<std::string> fams = {
      "chain:1",  "chain:2",  "chain:3",    "chain:4",    "chain:5",  "chain:6",
      "boolean:2", "boolean:3",
      "grid:2x2", "grid:2x3", "grid:2x4",   "grid:3x2",   "grid:3x3", "grid:3x4",
      "grid:4x2", "grid:4x3", "grid:4x4",
      "subsets:2,4", "subsets:2,5"};
  return fams;
}

// Random posets on <= 4 elements (read as nonzero join-irreducibles),
// sampled as random DAGs; the corpus lattice is the lattice of ideals.
std::vector<Lattice> random_corpus(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Lattice> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) covers.emplace_back(names[i], names[j]);
    out.push_back(Lattice::from_irreducibles(Poset::from_covers(names, covers)));
  }
  return out;
}

std::vector<Lattice> full_corpus() {
  std::vector<Lattice> corpus;
  for (const auto& f : named_families()) corpus.push_back(Lattice::family(f));
  for (auto& l : random_corpus(200, 20260826)) corpus.push_back(std::move(l));
  return corpus;
}

// Valid non-embeddedness witness: a non-comparable pair not contained in
// d whose join and meet both land in d.
bool witness_valid(const Lattice& l, const Bits& d, Index x, Index y) {
  if (d.test(x) && d.test(y)) return false;
  if (l.poset().leq(x, y) || l.poset().leq(y, x)) return false;
  return d.test(l.join(x, y)) && d.test(l.meet(x, y));
}

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  try {
    auto l = Lattice::family("grid:4x4");
    auto d = by_names(l, {"(2,2)", "(2,3)", "(3,2)", "(3,3)"});
    std::vector<Index> gamma = {l.poset().index_of("(2,2)"),
                                l.poset().index_of("(3,2)"),
                                l.poset().index_of("(3,3)")};
    auto lam = lambda_set(l, d, gamma);
    auto expect = by_names(l, {"(2,2)", "(3,2)", "(3,3)", "(1,1)", "(1,2)",
                               "(2,1)", "(3,4)", "(4,3)", "(4,4)"});
    ok = (lam == expect);
    std::pair<Index, Index> w{0, 0};
    bool embedded = is_embedded_sublattice(l, lam, &w);
    ok = ok && !embedded && witness_valid(l, lam, w.first, w.second);
    // The pinned pair ((2,4),(4,2)) must itself witness the failure.
    ok = ok && witness_valid(l, lam, l.poset().index_of("(2,4)"),
                             l.poset().index_of("(4,2)"));
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    ok = ok && ms < 1000.0;
    detail = "grid:4x4 lambda = 9-element set, not embedded; ((2,4),(4,2)) "
             "is a witness; " + std::to_string(ms) + " ms";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(1, ok, detail);
}

void criterion_2(const std::vector<Lattice>& corpus) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  long checked = 0;
  std::string detail;
  try {
    for (const auto& l : corpus) {
      for (const auto& f : enumerate_faces(l)) {
        auto r = cotangent_report(l, f.D);
        if (tangent_dim_oracle(l, f.D) != r.tangent_dim) {
          ok = false;
          detail = "disagreement on a face of a " +
                   std::to_string(l.size()) + "-element lattice";
        }
        ++checked;
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                 .count();
  ok = ok && s < 300.0;
  if (ok)
    detail = std::to_string(checked) + " faces across " +
             std::to_string(corpus.size()) + " lattices agree with the "
             "Jacobian oracle; " + std::to_string(s) + " s";
  report(2, ok, detail);
}

void criterion_3(const std::vector<Lattice>& corpus) {
  bool ok = true;
  long checked = 0;
  std::string detail;
  try {
    for (const auto& l : corpus) {
      for (const auto& f : enumerate_faces(l)) {
        auto chains = sublattice_maximal_chains(l, f.D);
        if (chains.size() > 50) continue;
        int base = cotangent_report(l, f.D, chains.front()).tangent_dim;
        for (std::size_t i = 1; i < chains.size(); ++i)
          if (cotangent_report(l, f.D, chains[i]).tangent_dim != base) {
            ok = false;
            detail = "tangent_dim depends on the chain for some face";
          }
        ++checked;
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  if (ok)
    detail = "tangent_dim chain-independent on " + std::to_string(checked) +
             " faces";
  report(3, ok, detail);
}

void criterion_4(const std::vector<Lattice>& corpus) {
  bool ok = true;
  std::string detail;
  try {
    for (const auto& l : corpus) {
      for (const auto& ch : l.poset().maximal_chains())
        if (static_cast<int>(ch.size()) != l.dim()) ok = false;
      if (semigroup_rank_oracle(l) != l.dim()) ok = false;
      if (!ok) {
        detail = "dimension mismatch on a " + std::to_string(l.size()) +
                 "-element lattice";
        break;
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  if (ok)
    detail = "#J == every maximal chain cardinality == semigroup rank on all " +
             std::to_string(corpus.size()) + " lattices";
  report(4, ok, detail);
}

void criterion_5(const std::vector<Lattice>& corpus) {
  bool ok = true;
  std::string detail;
  try {
    for (const auto& l : corpus) {
      auto sl = singular_locus(l);
      for (std::size_t i = 0; i < sl.faces.size(); ++i) {
        bool oracle_singular = tangent_dim_oracle(l, sl.faces[i].D) > l.dim();
        bool under_component = false;
        for (std::size_t c : sl.components)
          under_component =
              under_component || sl.faces[i].D.subset_of(sl.faces[c].D);
        if (oracle_singular != under_component) {
          ok = false;
          detail = "singular-set mismatch on a " + std::to_string(l.size()) +
                   "-element lattice";
        }
      }
    }
    // Pinned component answers.
    {
      auto l = Lattice::family("boolean:2");
      auto sl = singular_locus(l);
      if (sl.components.size() != 1 || sl.faces[sl.components[0]].D.any()) {
        ok = false;
        detail = "boolean:2 components != [{}]";
      }
    }
    {
      auto l = Lattice::family("subsets:2,4");
      auto sl = singular_locus(l);
      if (sl.components.size() != 1 ||
          !(sl.faces[sl.components[0]].D == by_names(l, {"12", "34"}))) {
        ok = false;
        detail = "subsets:2,4 components != [{12,34}]";
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  if (ok)
    detail = "oracle singular set == union of component closures; "
             "boolean:2 -> [{}], subsets:2,4 -> [{12,34}]";
  report(5, ok, detail);
}

void criterion_6(const std::vector<Lattice>& corpus) {
  bool ok = true;
  long vectors = 0;
  std::string detail;
  try {
    for (const auto& l : corpus) {
      for (const auto& f : enumerate_faces(l)) {
        auto r = cotangent_report(l, f.D);
        auto ker = jacobian_at(l, f.point).kernel_basis();
        for (const auto& v : ker) {
          ++vectors;
          for (int a : r.e_set.members())
            if (v[a] != 0) ok = false;
          for (const auto& cls : r.classes)
            for (std::size_t i = 1; i < cls.size(); ++i)
              if (v[cls[i]] != v[cls[0]]) ok = false;
        }
        // Coordinates Gamma u G-reps determine the kernel: the submatrix
        // of those rows has full rank tangent_dim.
        std::vector<Index> rows = r.gamma;
        rows.insert(rows.end(), r.g_reps.begin(), r.g_reps.end());
        RationalMatrix m(rows.size(), ker.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
          for (std::size_t k = 0; k < ker.size(); ++k)
            m.at(i, k) = ker[k][rows[i]];
        if (m.rank() != static_cast<std::size_t>(r.tangent_dim)) ok = false;
        if (!ok) {
          detail = "kernel functional property fails on a " +
                   std::to_string(l.size()) + "-element lattice";
          break;
        }
      }
      if (!ok) break;
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  if (ok)
    detail = std::to_string(vectors) +
             " kernel vectors vanish on E, constant on classes; "
             "Gamma u G rows have rank tangent_dim";
  report(6, ok, detail);
}

void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  try {
    // Birkhoff round trip: rebuild from the nonzero irreducibles.
    for (const char* fam : {"chain:5", "boolean:3", "grid:3x4", "subsets:2,5"}) {
      auto l = Lattice::family(fam);
      std::vector<std::string> names;
      std::vector<std::pair<std::string, std::string>> rel;
      for (Index a : l.nonzero_irreducibles()) {
        names.push_back(l.poset().name(a));
        for (Index b : l.nonzero_irreducibles())
          if (a != b && l.poset().leq(a, b))
            rel.emplace_back(l.poset().name(a), l.poset().name(b));
      }
      auto li = Lattice::from_irreducibles(Poset::from_covers(names, rel));
      if (li.size() != l.size() || li.dim() != l.dim() ||
          li.diamonds().size() != l.diamonds().size())
        ok = false;
    }

    // Face support round trip: D -> P_D -> D.
    for (const char* fam : {"boolean:3", "grid:3x3", "subsets:2,4"}) {
      auto l = Lattice::family(fam);
      for (const auto& f : enumerate_faces(l))
        if (!(support(l, f.point) == f.D)) ok = false;
    }

    // CLI export / re-ingest: the emitted lattice block rebuilds an
    // order-isomorphic lattice under the element-name bijection.
    for (const char* fam : {"boolean:3", "subsets:2,4"}) {
      auto rep = analyze(LatticeSpec::from_family(fam), {});
      LatticeSpec s;
      s.name = "reimport";
      for (const auto& e : rep["lattice"]["elements"])
        s.elements.push_back(e.get<std::string>());
      for (const auto& c : rep["lattice"]["covers"])
        s.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
      auto l1 = LatticeSpec::from_family(fam).build();
      auto l2 = s.build();
      if (l1.size() != l2.size()) { ok = false; continue; }
      for (Index a = 0; a < l1.size() && ok; ++a)
        for (Index b = 0; b < l1.size(); ++b) {
          Index a2 = l2.poset().index_of(l1.poset().name(a));
          Index b2 = l2.poset().index_of(l1.poset().name(b));
          if (l1.poset().leq(a, b) != l2.poset().leq(a2, b2)) ok = false;
        }
    }

    // Distinguished point lies on X_L iff the subset is embedded.
    {
      auto l = Lattice::family("boolean:2");
      for (unsigned mask = 0; mask < 16; ++mask) {
        Bits d(l.size());
        for (int i = 0; i < 4; ++i)
          if (mask & (1u << i)) d.set(i);
        VarietyPoint p;
        for (Index a = 0; a < l.size(); ++a)
          p.coords.emplace_back(d.test(a) ? 1 : 0);
        if (on_variety(l, p) != is_embedded_sublattice(l, d)) ok = false;
        bool threw = false;
        try {
          distinguished_point(l, d);
        } catch (const error&) {
          threw = true;
        }
        if (threw == is_embedded_sublattice(l, d)) ok = false;
      }
      // The pinned counterexample {0^, 1^}.
      Bits hat(l.size());
      hat.set(l.bottom());
      hat.set(l.top());
      if (is_embedded_sublattice(l, hat)) ok = false;
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                 .count();
  ok = ok && s < 60.0;
  if (detail.empty())
    detail = "Birkhoff, support and export round trips hold; P_D on X_L iff "
             "D embedded; " + std::to_string(s) + " s";
  report(7, ok, detail);
}

void criterion_8(const std::vector<Lattice>& corpus) {
  bool ok = true;
  std::string detail;
  try {
    for (int n = 1; n <= 6; ++n) {
      auto sl = singular_locus(Lattice::family("chain:" + std::to_string(n)));
      if (!sl.is_smooth_variety) {
        ok = false;
        detail = "chain:" + std::to_string(n) + " not reported smooth";
      }
    }
    for (const auto& l : corpus) {
      if (l.diamonds().empty()) continue;  // chains
      auto r = cotangent_report(l, Bits(l.size()));
      if (r.tangent_dim != l.size() || l.size() <= l.dim()) {
        ok = false;
        detail = "origin face of a non-chain lattice: tangent_dim != #L > #J";
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  if (ok)
    detail = "chain:1..6 smooth; origin of every non-chain lattice has "
             "tangent_dim = #L > #J";
  report(8, ok, detail);
}

}  // namespace

int main() {
  auto corpus = full_corpus();
  criterion_1();
  criterion_2(corpus);
  criterion_3(corpus);
  criterion_4(corpus);
  criterion_5(corpus);
  criterion_6(corpus);
  criterion_7();
  criterion_8(corpus);
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
