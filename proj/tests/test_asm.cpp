#include <doctest.h>

#include <set>
#include <vector>

#include "schubcomb/asm_matrix.hpp"
#include "schubcomb/bijections.hpp"

using namespace schubcomb;

namespace {

const std::vector<std::vector<int>> kSigned4x4Rows = {
    {0, 1, 0, 0}, {1, -1, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};

// Plain validity predicate, independent of the enumerator's row transitions.
bool dumb_valid(int n, const std::vector<int>& flat) {
  for (int i = 0; i < n; ++i) {
    int partial = 0;
    for (int j = 0; j < n; ++j) {
      partial += flat[static_cast<std::size_t>(i * n + j)];
      if (partial < 0 || partial > 1) return false;
    }
    if (partial != 1) return false;
  }
  for (int j = 0; j < n; ++j) {
    int partial = 0;
    for (int i = 0; i < n; ++i) {
      partial += flat[static_cast<std::size_t>(i * n + j)];
      if (partial < 0 || partial > 1) return false;
    }
    if (partial != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(Asm::identity(4));
  CHECK_NOTHROW(Asm::from_rows(kSigned4x4Rows));
  CHECK_THROWS_AS(Asm::from_rows({{1, -1, -1, 1},
                                  {0, 1, 0, 0},
                                  {0, 1, 0, 0},
                                  {0, 0, 1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Asm::from_rows({{1, 0}, {1, 0}}), std::invalid_argument);  // column sums
  CHECK_THROWS_AS(Asm::from_rows({{2, -1}, {-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Asm::from_rows({{1, 0, 0}, {0, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Asm::from_rows({{0, 1}, {1, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("text round trip") {
  const Asm a = Asm::from_rows(kSigned4x4Rows);
  CHECK(a.str() == "0 1 0 0\n1 -1 0 1\n0 0 1 0\n0 1 0 0\n");
  CHECK(Asm::parse(a.str()) == a);
}

TEST_CASE("enumeration counts and canonical order") {
  const std::vector<std::uint64_t> expected = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_asm(n) == expected[static_cast<std::size_t>(n) - 1]);
    if (n <= 5) CHECK(all_asms(n).size() == expected[static_cast<std::size_t>(n) - 1]);
  }
  CHECK_THROWS_AS(count_asm(0), std::invalid_argument);
  CHECK_THROWS_AS(count_asm(9), std::invalid_argument);

  const std::vector<Asm> threes = all_asms(3);
  CHECK(std::is_sorted(threes.begin(), threes.end()));
}

TEST_CASE("the seven 3x3 matrices") {
  const std::vector<Asm> threes = all_asms(3);
  std::set<Asm> got(threes.begin(), threes.end());
  std::set<Asm> expected;
  for (const Permutation& pi : symmetric_group(3)) expected.insert(Asm::permutation_matrix(pi));
  expected.insert(Asm::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}));
  CHECK(got == expected);
}

TEST_CASE("n = 1 is the 1x1 matrix (1)") {
  const std::vector<Asm> ones = all_asms(1);
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].at(1, 1) == 1);
}

TEST_CASE("enumeration agrees with the brute-force filter for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    // Walk all {-1,0,1} matrices, pruning only on exact prefix violations of
    // the dumb validity predicate (row-by-row to keep the walk feasible).
    std::uint64_t count = 0;
    std::vector<int> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == n * n) {
        if (dumb_valid(n, flat)) ++count;
        return;
      }
      for (int v = -1; v <= 1; ++v) {
        flat[static_cast<std::size_t>(pos)] = v;
        // prune completed rows early with the dumb row test
        if ((pos + 1) % n == 0) {
          int partial = 0;
          bool ok = true;
          for (int j = pos + 1 - n; j <= pos; ++j) {
            partial += flat[static_cast<std::size_t>(j)];
            if (partial < 0 || partial > 1) ok = false;
          }
          if (!ok || partial != 1) continue;
        }
        self(self, pos + 1);
      }
      flat[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0);
    CHECK(count == count_asm(n));
  }
}

TEST_CASE("nw zeros, positive inversions and weight") {
  const Asm sample = Asm::from_rows(kSigned4x4Rows);
  CHECK(sample.nw_zeros() == CellSet{{1, 1}, {2, 3}, {3, 2}});
  CHECK(sample.positive_inversions() == 3);
  CHECK(sample.weight() == Monomial::var(1) * Monomial::var(2) * Monomial::var(3));
  CHECK(Asm::identity(5).positive_inversions() == 0);
  CHECK(Asm::identity(5).weight().is_one());
  // Permutation matrices: the positive inversion count equals the Rothe
  // diagram size.
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& pi : symmetric_group(n)) {
      const Asm a = Asm::permutation_matrix(pi);
      CHECK(a.positive_inversions() == static_cast<int>(rothe_diagram(pi).blanks.size()));
      CHECK(a.nw_zeros() == rothe_diagram(pi).blanks);
    }
}

TEST_CASE("asm to bpd and back") {
  const Bpd identity_bpd = asm_to_bpd(Asm::identity(3));
  CHECK(identity_bpd.str() == "r--\n|r-\n||r\n");
  const Asm sample = Asm::from_rows(kSigned4x4Rows);
  const Bpd sample_bpd = asm_to_bpd(sample);
  CHECK(sample_bpd.str() == ".r--\nrj.r\n|.r+\n|r++\n");
  CHECK(sample_bpd.blanks() == sample.nw_zeros());
  CHECK(sample_bpd.blank_weight() == sample.weight());
  CHECK(bpd_to_asm(sample_bpd) == sample);
}

TEST_CASE("round trip and weight equality over all ASMs up to n = 5") {
  for (int n = 1; n <= 5; ++n)
    enumerate_asm(n, [&](const Asm& a) {
      const Bpd d = asm_to_bpd(a);
      CHECK(bpd_to_asm(d) == a);
      CHECK(d.blanks() == a.nw_zeros());
      CHECK(d.blank_weight() == a.weight());
    });
}
