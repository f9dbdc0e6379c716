#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubcomb/cell.hpp"
#include "schubcomb/monomial.hpp"
#include "schubcomb/permutation.hpp"
#include "schubcomb/poset.hpp"

namespace schubcomb {

// The six bumpless pipe dream tiles. SeElbow joins a cell's south and east
// edges (ASM +1); NwElbow joins west and north (ASM -1).
enum class Tile : std::uint8_t {
  Blank = 0,
  Horizontal,  // west-east
  Vertical,    // north-south
  Cross,       // both straight strands
  SeElbow,
  NwElbow,
};

char tile_char(Tile t);  // ". - | + r j"
Tile tile_from_char(char c);
bool tile_north(Tile t);
bool tile_south(Tile t);
bool tile_east(Tile t);
bool tile_west(Tile t);

// n x n tile grid forming n pipes that enter on the south border and leave on
// the east border, moving only north and east. The constructor validates edge
// matching between neighbors and the border profile.
class Bpd {
 public:
  Bpd(int n, std::vector<Tile> tiles);  // row-major
  static Bpd parse(std::string_view text);

  int size() const { return n_; }
  Tile at(int i, int j) const {  // 1-based
    return tiles_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j - 1)];
  }
  const std::vector<Tile>& tiles() const { return tiles_; }

  CellSet blanks() const;
  Monomial blank_weight() const;  // product of x_i over blank tiles (i,j)

  std::string str() const;  // n lines of n characters over ".-|+rj"
  std::string key() const;  // single line, rows joined by '/'

  auto operator<=>(const Bpd&) const = default;

 private:
  int n_;
  std::vector<Tile> tiles_;
};

struct BpdRouting {
  // paths[k] lists the cells pipe k+1 visits, ordered from the south border
  // to the east border. Pipe k enters below column k.
  std::vector<std::vector<Cell>> paths;
  // For each cross tile, the (vertical strand, horizontal strand) pipe pair.
  std::map<Cell, std::pair<int, int>> crossings;
  // exit_row_pipe[i-1] = label of the pipe leaving east at row i.
  std::vector<int> exit_row_pipe;
};

BpdRouting trace_pipes(const Bpd& bpd);

// No two pipes share two cross tiles.
bool is_reduced(const Bpd& bpd);
// East-border labels top to bottom; requires a reduced BPD.
Permutation permutation(const Bpd& bpd);

// The BPD of the permutation matrix of pi; its blanks are the Rothe diagram.
Bpd rothe_bpd(const Permutation& pi);

// All results of one simple droop: a 2x2 move taking the SE elbow at (i,j)
// with a blank at (i+1,j+1) to a blank at (i,j) with the pipe rerouted
// through (i+1,j+1), preserving the square's border connections.
std::vector<Bpd> simple_droops(const Bpd& bpd);

// Closure of simple droops from the Rothe BPD. Elements are labeled by their
// blank weight; the Rothe BPD is the unique minimal element.
Poset droop_poset(const Permutation& pi);

}  // namespace schubcomb
