// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. --extended adds the n = 7 table row.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "schubcomb/bijections.hpp"

using namespace schubcomb;

namespace {

int failures = 0;

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void require(bool ok, const std::string& detail) {
    if (!ok) {
      ok_ = false;
      details_.push_back(detail);
    }
  }

  void finish(double seconds) const {
    std::printf("[%s] %s (%.1fs)\n", ok_ ? "PASS" : "FAIL", name_.c_str(), seconds);
    for (const std::string& d : details_) std::printf("       %s\n", d.c_str());
    if (!ok_) ++failures;
  }

 private:
  std::string name_;
  bool ok_ = true;
  std::vector<std::string> details_;
};

template <class Body>
void run(const std::string& name, Body&& body) {
  Criterion c(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.finish(seconds);
}

std::string row_str(const Table1Row& r) {
  return std::to_string(r.perm_bijection) + ", " + std::to_string(r.both_avoiding) + ", " +
         std::to_string(r.av1432) + ", " + std::to_string(r.matched_in_injection) + ", " +
         std::to_string(r.total_asm);
}

void check_table_row(Criterion& c, const Table1Row& got, std::uint64_t perm, std::uint64_t both,
                     std::uint64_t av1432, std::uint64_t matched, std::uint64_t total) {
  const Table1Row expected{got.n, perm, both, av1432, matched, total};
  if (row_str(got) != row_str(expected))
    c.require(false, "n=" + std::to_string(got.n) + ": expected (" + row_str(expected) +
                         "), computed (" + row_str(got) + ")");
}

// Brute-force pattern containment (all index subsequences).
bool contains_oracle(const Permutation& pi, const Permutation& pattern) {
  const int n = pi.size(), k = pattern.size();
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::function<bool(int, int)> pick = [&](int pos, int start) {
    if (pos == k) {
      for (int s = 0; s < k; ++s)
        for (int t = s + 1; t < k; ++t)
          if ((pattern(s + 1) < pattern(t + 1)) !=
              (pi(idx[static_cast<std::size_t>(s)]) < pi(idx[static_cast<std::size_t>(t)])))
            return false;
      return true;
    }
    for (int i = start; i <= n; ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      if (pick(pos + 1, i + 1)) return true;
    }
    return false;
  };
  return pick(0, 1);
}

bool brute_poset_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(p.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::pair<int, int>> pe(p.covers().begin(), p.covers().end());
  std::set<std::pair<int, int>> qe(q.covers().begin(), q.covers().end());
  do {
    bool ok = pe.size() == qe.size();
    for (auto it = pe.begin(); ok && it != pe.end(); ++it)
      if (!qe.contains({perm[static_cast<std::size_t>(it->first)],
                        perm[static_cast<std::size_t>(it->second)]}))
        ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--extended") extended = true;

  const Permutation p1432 = Permutation::parse("1432");
  const Permutation p2143 = Permutation::parse("2143");

  run("criterion 1: Table 1 reproduction, n = 1..6", [&](Criterion& c) {
    const std::vector<Table1Row> rows = table1(6);
    check_table_row(c, rows[0], 1, 1, 1, 1, 1);
    check_table_row(c, rows[1], 2, 2, 2, 2, 2);
    check_table_row(c, rows[2], 6, 7, 7, 7, 7);
    check_table_row(c, rows[3], 24, 33, 36, 40, 42);
    check_table_row(c, rows[4], 120, 185, 246, 362, 429);
    check_table_row(c, rows[5], 720, 1175, 2135, 5125, 7436);
  });

  if (extended) {
    run("criterion 1 (extended): Table 1 row n = 7", [&](Criterion& c) {
      check_table_row(c, table1_row(7), 5040, 8261, 23067, 112941, 218348);
    });
  }

  run("criterion 2: TSSCPP/ASM equinumerosity, n = 1..7", [&](Criterion& c) {
    for (int n = 1; n <= 7; ++n)
      c.require(count_triangles(n) == count_asm(n),
                "n=" + std::to_string(n) + ": " + std::to_string(count_triangles(n)) +
                    " triangles vs " + std::to_string(count_asm(n)) + " ASMs");
  });

  run("criterion 3: Schubert identity over S4 and S5", [&](Criterion& c) {
    for (int n = 4; n <= 5; ++n)
      for (const Permutation& pi : symmetric_group(n))
        c.require(schubert_from_pd(pi) == schubert_from_bpd(pi), "mismatch at " + pi.str());
  });

  run("criterion 4: pseudo-Yamanouchi characterization, n = 1..5", [&](Criterion& c) {
    for (int n = 1; n <= 5; ++n) {
      std::map<std::string, Monomial> image;
      enumerate_triangles(n, [&](const BooleanTriangle& t) {
        image.emplace(triangle_to_pd(t).key(), t.weight());
      });
      std::set<std::string> py;
      enumerate_pd(n, [&](const PipeDream& d) {
        if (is_pseudo_yamanouchi(d)) py.insert(d.key());
      });
      std::set<std::string> image_keys;
      for (const auto& [key, weight] : image) image_keys.insert(key);
      c.require(image_keys == py, "image/PY set mismatch at n=" + std::to_string(n));
      for (const auto& [key, weight] : image)
        c.require(PipeDream::parse(key).cross_weight() == weight,
                  "weight mismatch at n=" + std::to_string(n));
    }
  });

  run("criterion 5: weight multisets over S5", [&](Criterion& c) {
    for (const Permutation& pi : symmetric_group(5)) {
      const TheoremMainReport r = verify_theorem_main(pi);
      c.require(r.dominated, "domination fails at " + pi.str());
      if (r.avoids_1432) c.require(r.equal, "equality fails at " + pi.str());
    }
    const TheoremMainReport r = verify_theorem_main(p1432);
    c.require(r.tsscpp_side.total() == 4 && r.bpd_side.total() == 5,
              "1432 sides are not 4 and 5");
  });

  run("criterion 6: poset correspondences over S5", [&](Criterion& c) {
    for (const Permutation& pi : symmetric_group(5)) {
      if (is_inverse_grassmannian(pi)) {
        const PosetCorrespondence r = inv_grass_correspondence(pi);
        for (int v = 0; v < r.droop.size(); ++v)
          c.require(r.droop.elements()[static_cast<std::size_t>(v)].label ==
                        r.matched.elements()[static_cast<std::size_t>(
                            r.iso[static_cast<std::size_t>(v)])].label,
                    "weight mismatch in inv-grass at " + pi.str());
      }
      if (is_grassmannian(pi)) grass_correspondence(pi);
      if (avoids(pi, p1432) && avoids(pi, p2143)) {
        const BlockCorrespondenceReport r = block_correspondence(pi);
        c.require(r.factorization_injective, "factorization not injective at " + pi.str());
        c.require(r.slide_order_matches, "slide/droop size mismatch at " + pi.str());
      }
    }
    const PosetCorrespondence corr14253 = inv_grass_correspondence(Permutation::parse("14253"));
    c.require(corr14253.droop.size() == 8 && corr14253.droop.covers().size() == 10,
              "droop(14253) does not have 8 elements and 10 covers");
    const Permutation g = Permutation::parse("146235");
    grass_correspondence(g);
    const Poset slide = slide_poset(g);
    c.require(!slide.is_isomorphic_to(slide.dual(), false),
              "slide(146235) should not be self-dual");
  });

  run("criterion 7: lemma suite", [&](Criterion& c) {
    for (int n = 1; n <= 6; ++n)
      for (const Permutation& pi : symmetric_group(n))
        c.require(is_pseudo_yamanouchi(bottom_pd(pi)), "bottom not PY at " + pi.str());
    for (int n = 1; n <= 5; ++n)
      enumerate_pd(n, [&](const PipeDream& d) {
        if (!is_pseudo_yamanouchi(d)) return;
        for (const PipeDream& e : simple_slides(d))
          c.require(is_pseudo_yamanouchi(e), "slide broke PY at n=" + std::to_string(n));
      });
    for (int n = 1; n <= 5; ++n) {
      // Bucket reduced objects by permutation in single sweeps.
      std::map<std::vector<int>, std::set<std::string>> red_bpds;
      enumerate_asm(n, [&](const Asm& a) {
        const Bpd d = asm_to_bpd(a);
        if (is_reduced(d)) red_bpds[trace_pipes(d).exit_row_pipe].insert(d.key());
      });
      std::map<std::vector<int>, std::set<std::string>> red_pds;
      enumerate_pd(n, [&](const PipeDream& d) {
        if (is_reduced(d)) red_pds[trace(d).exit_row_pipe].insert(d.key());
      });
      for (const Permutation& pi : symmetric_group(n)) {
        if (avoids(pi, p2143)) {
          const Poset droop = droop_poset(pi);
          std::set<std::string> keys;
          for (const auto& e : droop.elements()) keys.insert(e.key);
          c.require(keys == red_bpds[pi.word()], "droop != BPD set at " + pi.str());
        }
        if (avoids(pi, p1432)) {
          const Poset slide = slide_poset(pi);
          std::set<std::string> keys;
          for (const auto& e : slide.elements()) keys.insert(e.key);
          c.require(keys == red_pds[pi.word()], "slide != PD^red at " + pi.str());
          const CellSet dom = dominant_region(pi);
          for (const CellSet& comp : connected_components(rothe_diagram(pi).blanks)) {
            if (!dom.empty() && comp.contains(*dom.begin())) continue;
            c.require(is_rectangle(comp), "non-rectangular blank region at " + pi.str());
          }
        }
        if (avoids(pi, p2143)) {
          const CellSet boxes = essential_boxes(pi);
          for (const Cell& a : boxes)
            for (const Cell& b : boxes)
              c.require(!(a.row < b.row && a.col < b.col),
                        "essential boxes not NE-SW at " + pi.str());
        }
      }
    }
  });

  run("criterion 8: round-trip oracles", [&](Criterion& c) {
    for (int n = 1; n <= 5; ++n) {
      enumerate_asm(n, [&](const Asm& a) {
        c.require(bpd_to_asm(asm_to_bpd(a)) == a, "asm/bpd round trip failed");
      });
      enumerate_pd(n, [&](const PipeDream& d) {
        c.require(sequence_to_pd(pd_to_sequence(d), n) == d, "pd/sequence round trip failed");
      });
      enumerate_triangles(n, [&](const BooleanTriangle& t) {
        c.require(pd_to_triangle(triangle_to_pd(t)) == t, "triangle/pd round trip failed");
      });
    }
    const std::vector<Permutation> patterns = {Permutation::parse("21"),
                                               Permutation::parse("312"),
                                               Permutation::parse("1432"),
                                               Permutation::parse("2143")};
    for (int n = 1; n <= 7; ++n)
      for (const Permutation& pi : symmetric_group(n))
        for (const Permutation& pattern : patterns)
          c.require(contains_pattern(pi, pattern) == contains_oracle(pi, pattern),
                    "containment oracle mismatch at " + pi.str());
    // poset isomorphism vs brute force on slide/droop posets of <= 8 elements
    int compared = 0;
    for (const Permutation& pi : symmetric_group(4)) {
      const Poset a = slide_poset(pi);
      const Poset b = droop_poset(pi);
      if (a.size() <= 8 && b.size() <= 8) {
        ++compared;
        c.require(a.is_isomorphic_to(b, false) == brute_poset_isomorphic(a, b),
                  "poset oracle mismatch at " + pi.str());
        c.require(a.is_isomorphic_to(a.dual(), false) ==
                      brute_poset_isomorphic(a, a.dual()),
                  "poset dual oracle mismatch at " + pi.str());
      }
    }
    c.require(compared > 0, "no posets compared");
  });

  if (failures != 0)
    std::printf(
        "note: the Matched-in-injection column computed from its definition is\n"
        "      (1, 2, 7, 40, 360, 5002, 106035); every other column matches the\n"
        "      pinned reference values exactly. See the README for details.\n");
  return failures == 0 ? 0 : 1;
}
