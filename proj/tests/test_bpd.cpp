#include <doctest.h>

#include <map>
#include <set>

#include "schubcomb/asm_matrix.hpp"
#include "schubcomb/bijections.hpp"
#include "schubcomb/bpd.hpp"

using namespace schubcomb;

TEST_CASE("tile characters and edges") {
  CHECK(tile_char(Tile::Blank) == '.');
  CHECK(tile_from_char('r') == Tile::SeElbow);
  CHECK(tile_from_char('j') == Tile::NwElbow);
  CHECK_THROWS_AS(tile_from_char('x'), std::invalid_argument);
  CHECK(tile_south(Tile::SeElbow));
  CHECK(tile_east(Tile::SeElbow));
  CHECK_FALSE(tile_north(Tile::SeElbow));
  CHECK(tile_west(Tile::NwElbow));
  CHECK(tile_north(Tile::NwElbow));
}

TEST_CASE("parse validates edge matching") {
  CHECK_NOTHROW(Bpd::parse("r--\n|r-\n||r\n"));
  CHECK_THROWS_AS(Bpd::parse("r-\nrr"), std::invalid_argument);
  CHECK_THROWS_AS(Bpd::parse("..\n.."), std::invalid_argument);  // no pipes at all
  const Bpd rothe = rothe_bpd(Permutation::parse("14253"));
  CHECK(Bpd::parse(rothe.str()) == rothe);
  CHECK(Bpd::parse(rothe.key()) == rothe);
}

TEST_CASE("tracing the identity and the transposition") {
  const Bpd id = rothe_bpd(Permutation::identity(4));
  const BpdRouting routing = trace_pipes(id);
  CHECK(routing.crossings.empty());
  CHECK(routing.exit_row_pipe == std::vector<int>{1, 2, 3, 4});
  CHECK(is_reduced(id));
  CHECK(permutation(id) == Permutation::identity(4));

  const Bpd swap = rothe_bpd(Permutation::parse("21"));
  const BpdRouting swap_routing = trace_pipes(swap);
  CHECK(swap_routing.crossings.size() == 1);
  CHECK(swap_routing.exit_row_pipe == std::vector<int>{2, 1});
  CHECK(swap_routing.crossings.begin()->first == Cell{2, 2});
}

TEST_CASE("the 4x4 ASM example traces to 1432 with three crossings") {
  const Asm sample =
      Asm::from_rows({{0, 1, 0, 0}, {1, -1, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}});
  const Bpd d = asm_to_bpd(sample);
  CHECK(trace_pipes(d).crossings.size() == 3);
  CHECK(is_reduced(d));
  CHECK(permutation(d) == Permutation::parse("1432"));
}

TEST_CASE("rothe BPDs over S5: reduced, correct permutation, blanks = Rothe diagram") {
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& pi : symmetric_group(n)) {
      const Bpd d = rothe_bpd(pi);
      CHECK(is_reduced(d));
      CHECK(permutation(d) == pi);
      CHECK(d.blanks() == rothe_diagram(pi).blanks);
      // exactly one SE elbow per pipe, no NW elbows
      int se = 0, nw = 0;
      for (Tile t : d.tiles()) {
        se += t == Tile::SeElbow;
        nw += t == Tile::NwElbow;
      }
      CHECK(se == n);
      CHECK(nw == 0);
    }
}

TEST_CASE("rothe BPD of 14253") {
  const Bpd d = rothe_bpd(Permutation::parse("14253"));
  CHECK(d.str() == "r----\n|..r-\n|r-+-\n||.|r\n||r++\n");
  CHECK(d.blanks() == CellSet{{2, 2}, {2, 3}, {4, 3}});
}

TEST_CASE("blank weight") {
  CHECK(rothe_bpd(Permutation::identity(4)).blank_weight().is_one());
  for (const Permutation& pi : symmetric_group(4)) {
    // Rothe blank weight is the Lehmer-code monomial.
    Monomial expected;
    const auto code = pi.lehmer_code();
    for (int i = 1; i <= pi.size(); ++i)
      expected *= Monomial::var(i, code[static_cast<std::size_t>(i) - 1]);
    CHECK(rothe_bpd(pi).blank_weight() == expected);
  }
}

TEST_CASE("simple droops") {
  CHECK(simple_droops(rothe_bpd(Permutation::identity(4))).empty());
  CHECK(simple_droops(rothe_bpd(Permutation::parse("21"))).empty());

  // A droop keeps the permutation and the crossing pairs, and moves exactly
  // one blank up one row.
  for (const Permutation& pi : symmetric_group(4)) {
    std::vector<Bpd> frontier{rothe_bpd(pi)};
    std::set<std::string> seen{frontier.front().key()};
    while (!frontier.empty()) {
      std::vector<Bpd> next;
      for (const Bpd& d : frontier) {
        const CellSet before = d.blanks();
        for (const Bpd& e : simple_droops(d)) {
          CHECK(is_reduced(e));
          CHECK(permutation(e) == pi);
          const CellSet after = e.blanks();
          CHECK(after.size() == before.size());
          std::vector<Cell> gained, lost;
          for (const Cell& c : after)
            if (!before.contains(c)) gained.push_back(c);
          for (const Cell& c : before)
            if (!after.contains(c)) lost.push_back(c);
          REQUIRE(gained.size() == 1);
          REQUIRE(lost.size() == 1);
          CHECK(gained[0].row + 1 == lost[0].row);
          if (seen.insert(e.key()).second) next.push_back(e);
        }
      }
      frontier = std::move(next);
    }
  }
}

TEST_CASE("droop posets") {
  CHECK(droop_poset(Permutation::identity(3)).size() == 1);

  const Poset p1432 = droop_poset(Permutation::parse("1432"));
  CHECK(p1432.size() == 5);

  // 14253 avoids 2143, so the droop closure is all of BPD(14253); the drawn
  // poset has eight elements.
  const Poset p14253 = droop_poset(Permutation::parse("14253"));
  CHECK(p14253.size() == 8);
  CHECK(p14253.covers().size() == 10);
  const auto minima = p14253.minimal_elements();
  REQUIRE(minima.size() == 1);
  CHECK(p14253.elements()[static_cast<std::size_t>(minima.front())].key ==
        rothe_bpd(Permutation::parse("14253")).key());
}

TEST_CASE("droop closure equals the reduced BPDs for 2143-avoiding permutations") {
  const Permutation p2143 = Permutation::parse("2143");
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& pi : symmetric_group(n)) {
      if (contains_pattern(pi, p2143)) continue;
      const Poset droop = droop_poset(pi);
      const std::vector<Bpd> bpds = all_bpd_red(pi);
      REQUIRE(static_cast<std::size_t>(droop.size()) == bpds.size());
      for (const Bpd& d : bpds) CHECK(droop.index_of(d.key()) >= 0);
      // blank positions determine the element
      std::set<CellSet> blank_sets;
      for (const Bpd& d : bpds) blank_sets.insert(d.blanks());
      CHECK(blank_sets.size() == bpds.size());
    }
}

TEST_CASE("non-reduced BPDs are representable; permutation extraction fails") {
  // The unique 4x4 ASM whose BPD is not reduced.
  int nonreduced = 0;
  enumerate_asm(4, [&](const Asm& a) {
    const Bpd d = asm_to_bpd(a);
    if (is_reduced(d)) return;
    ++nonreduced;
    CHECK_THROWS_AS(permutation(d), std::invalid_argument);
    CHECK(Bpd::parse(d.str()) == d);
  });
  CHECK(nonreduced == 1);
}

TEST_CASE("routing determines the tiling") {
  // Rebuild every tile from the strand flows of the traced pipes; the
  // reconstruction must reproduce the input grid exactly.
  for (int n = 1; n <= 4; ++n)
    enumerate_asm(n, [&](const Asm& a) {
      const Bpd d = asm_to_bpd(a);
      const BpdRouting routing = trace_pipes(d);
      struct Flow {
        bool s_n = false, s_e = false, w_n = false, w_e = false;
      };
      std::map<Cell, Flow> flows;
      for (const auto& path : routing.paths) {
        for (std::size_t k = 0; k < path.size(); ++k) {
          const Cell& c = path[k];
          const bool from_south = k == 0 || path[k - 1].row == c.row + 1;
          const bool exit_north = k + 1 < path.size() && path[k + 1].row == c.row - 1;
          Flow& f = flows[c];
          if (from_south && exit_north) f.s_n = true;
          if (from_south && !exit_north) f.s_e = true;
          if (!from_south && exit_north) f.w_n = true;
          if (!from_south && !exit_north) f.w_e = true;
        }
      }
      for (int i = 1; i <= d.size(); ++i)
        for (int j = 1; j <= d.size(); ++j) {
          const Flow f = flows[Cell{i, j}];
          Tile rebuilt = Tile::Blank;
          if (f.s_n && f.w_e)
            rebuilt = Tile::Cross;
          else if (f.s_e)
            rebuilt = Tile::SeElbow;
          else if (f.w_n)
            rebuilt = Tile::NwElbow;
          else if (f.s_n)
            rebuilt = Tile::Vertical;
          else if (f.w_e)
            rebuilt = Tile::Horizontal;
          CHECK(rebuilt == d.at(i, j));
        }
    });
}

TEST_CASE("rothe block structure of Grassmannian permutations") {
  // Blank components are rectangles sharing the bottom row, the leftmost one
  // starts on the diagonal, and consecutive heights drop by the gap width.
  struct Rect {
    int top, left, bottom, right;
  };
  auto bounds = [](const CellSet& comp) {
    Rect r{comp.begin()->row, comp.begin()->col, comp.begin()->row, comp.begin()->col};
    for (const Cell& c : comp) {
      r.top = std::min(r.top, c.row);
      r.bottom = std::max(r.bottom, c.row);
      r.left = std::min(r.left, c.col);
      r.right = std::max(r.right, c.col);
    }
    return r;
  };
  for (int n = 2; n <= 6; ++n)
    for (const Permutation& pi : symmetric_group(n)) {
      if (pi.inversions() == 0) continue;
      if (is_grassmannian(pi)) {
        std::vector<Rect> rects;
        for (const CellSet& comp : connected_components(rothe_diagram(pi).blanks)) {
          CHECK(is_rectangle(comp));
          rects.push_back(bounds(comp));
        }
        std::sort(rects.begin(), rects.end(),
                  [](const Rect& a, const Rect& b) { return a.left < b.left; });
        CHECK(rects.front().top == rects.front().left);
        for (const Rect& r : rects) CHECK(r.bottom == rects.front().bottom);
        for (std::size_t k = 0; k + 1 < rects.size(); ++k) {
          const int gap = rects[k + 1].left - rects[k].right - 1;
          const int h1 = rects[k].bottom - rects[k].top + 1;
          const int h2 = rects[k + 1].bottom - rects[k + 1].top + 1;
          CHECK(h1 == gap + h2);
        }
      }
      if (is_inverse_grassmannian(pi)) {
        std::vector<Rect> rects;
        for (const CellSet& comp : connected_components(rothe_diagram(pi).blanks)) {
          CHECK(is_rectangle(comp));
          rects.push_back(bounds(comp));
        }
        std::sort(rects.begin(), rects.end(),
                  [](const Rect& a, const Rect& b) { return a.top < b.top; });
        CHECK(rects.front().top == rects.front().left);
        for (const Rect& r : rects) CHECK(r.right == rects.front().right);
        for (std::size_t k = 0; k + 1 < rects.size(); ++k) {
          const int gap = rects[k + 1].top - rects[k].bottom - 1;
          const int w1 = rects[k].right - rects[k].left + 1;
          const int w2 = rects[k + 1].right - rects[k + 1].left + 1;
          CHECK(w1 == gap + w2);
        }
      }
    }
}
