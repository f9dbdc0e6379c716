#include "schubcomb/cell.hpp"

#include <algorithm>
#include <map>

namespace schubcomb {

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string to_string(const CellSet& cells) {
  std::string out = "{";
  bool first = true;
  for (const Cell& c : cells) {
    if (!first) out += ",";
    out += to_string(c);
    first = false;
  }
  out += "}";
  return out;
}

std::vector<CellSet> connected_components(const CellSet& cells) {
  std::vector<CellSet> components;
  CellSet remaining = cells;
  while (!remaining.empty()) {
    CellSet component;
    std::vector<Cell> stack{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      component.insert(c);
      for (Cell nb : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col},
                      Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}}) {
        auto it = remaining.find(nb);
        if (it != remaining.end()) {
          remaining.erase(it);
          stack.push_back(nb);
        }
      }
    }
    components.push_back(std::move(component));
  }
  std::sort(components.begin(), components.end(),
            [](const CellSet& a, const CellSet& b) { return *a.begin() < *b.begin(); });
  return components;
}

bool is_partition_shaped(const CellSet& component) {
  if (component.empty()) return true;
  int top = component.begin()->row;
  int left = component.begin()->col;
  std::map<int, std::vector<int>> rows;
  for (const Cell& c : component) {
    left = std::min(left, c.col);
    rows[c.row].push_back(c.col);
  }
  int prev_len = 0;
  int expected_row = top;
  for (auto& [row, cols] : rows) {
    if (row != expected_row++) return false;  // vertical gap
    std::sort(cols.begin(), cols.end());
    if (cols.front() != left) return false;  // not left-justified
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (cols[k] != left + static_cast<int>(k)) return false;  // horizontal gap
    int len = static_cast<int>(cols.size());
    if (row != top && len > prev_len) return false;  // rows must weakly decrease
    prev_len = len;
  }
  return true;
}

bool is_rectangle(const CellSet& component) {
  if (component.empty()) return false;
  int top = component.begin()->row, bottom = top;
  int left = component.begin()->col, right = left;
  for (const Cell& c : component) {
    top = std::min(top, c.row);
    bottom = std::max(bottom, c.row);
    left = std::min(left, c.col);
    right = std::max(right, c.col);
  }
  return static_cast<int>(component.size()) == (bottom - top + 1) * (right - left + 1);
}

std::vector<int> partition_row_lengths(const CellSet& component) {
  std::vector<int> lengths;
  if (component.empty()) return lengths;
  std::map<int, int> per_row;
  for (const Cell& c : component) per_row[c.row] += 1;
  for (const auto& [row, len] : per_row) lengths.push_back(len);
  return lengths;
}

}  // namespace schubcomb
