#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace schubcomb {

// Grid cell, 1-indexed, row 1 at the top and column 1 at the left.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

using CellSet = std::set<Cell>;

std::string to_string(const Cell& c);
std::string to_string(const CellSet& cells);

// 4-connected components, ordered by their smallest cell.
std::vector<CellSet> connected_components(const CellSet& cells);

// True when the component, anchored at its NW bounding corner, is the Young
// diagram of a partition (left-justified rows of weakly decreasing length,
// no gaps between rows).
bool is_partition_shaped(const CellSet& component);
bool is_rectangle(const CellSet& component);

// Row lengths of a partition-shaped component, top to bottom.
std::vector<int> partition_row_lengths(const CellSet& component);

}  // namespace schubcomb
