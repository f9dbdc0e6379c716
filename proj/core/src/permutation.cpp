#include "schubcomb/permutation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace schubcomb {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation: word is not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation: negative size");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::from_lehmer_code(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> w;
  w.reserve(code.size());
  for (int i = 0; i < n; ++i) {
    const int c = code[static_cast<std::size_t>(i)];
    if (c < 0 || c >= static_cast<int>(remaining.size()))
      throw std::invalid_argument("permutation: invalid Lehmer code entry");
    w.push_back(remaining[static_cast<std::size_t>(c)]);
    remaining.erase(remaining.begin() + c);
  }
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string token(text.substr(pos, next - pos));
      if (token.empty()) throw std::invalid_argument("permutation: empty entry in list");
      w.push_back(std::stoi(token));
      pos = next + 1;
      if (next == text.size()) break;
    }
  } else {
    for (char c : text) {
      if (c == '\n' || c == '\r' || c == ' ') continue;
      if (c < '1' || c > '9')
        throw std::invalid_argument("permutation: expected digits 1-9 or a comma-separated list");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : word_) out += static_cast<char>('0' + v);
  } else {
    for (std::size_t k = 0; k < word_.size(); ++k) {
      if (k > 0) out += ",";
      out += std::to_string(word_[k]);
    }
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::descents() const {
  std::vector<int> des;
  for (int i = 1; i < size(); ++i)
    if ((*this)(i) > (*this)(i + 1)) des.push_back(i);
  return des;
}

int Permutation::descent_count() const { return static_cast<int>(descents().size()); }

std::vector<int> Permutation::lehmer_code() const {
  std::vector<int> code(word_.size(), 0);
  for (int i = 1; i <= size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if ((*this)(j) < (*this)(i)) ++code[static_cast<std::size_t>(i) - 1];
  return code;
}

int Permutation::inversions() const {
  const auto code = lehmer_code();
  return std::accumulate(code.begin(), code.end(), 0);
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool contains_pattern(const Permutation& pi, const Permutation& pattern) {
  const int n = pi.size();
  const int k = pattern.size();
  if (k > n) return false;
  if (k == 0) return true;
  const auto& w = pi.word();
  const auto& p = pattern.word();
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  auto consistent = [&](int idx) {
    const int t = static_cast<int>(chosen.size());
    for (int s = 0; s < t; ++s) {
      const bool pat_less = p[static_cast<std::size_t>(s)] < p[static_cast<std::size_t>(t)];
      const bool word_less =
          w[static_cast<std::size_t>(chosen[static_cast<std::size_t>(s)])] <
          w[static_cast<std::size_t>(idx)];
      if (pat_less != word_less) return false;
    }
    return true;
  };
  std::function<bool(int)> extend = [&](int start) {
    if (static_cast<int>(chosen.size()) == k) return true;
    const int need = k - static_cast<int>(chosen.size());
    for (int idx = start; idx + need <= n; ++idx) {
      if (!consistent(idx)) continue;
      chosen.push_back(idx);
      if (extend(idx + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(0);
}

bool avoids(const Permutation& pi, const Permutation& pattern) {
  return !contains_pattern(pi, pattern);
}

RotheDiagram rothe_diagram(const Permutation& pi) {
  RotheDiagram d;
  d.n = pi.size();
  const Permutation inv = pi.inverse();
  for (int i = 1; i <= d.n; ++i)
    for (int j = 1; j <= d.n; ++j)
      if (pi(i) > j && inv(j) > i) d.blanks.insert(Cell{i, j});
  return d;
}

bool is_grassmannian(const Permutation& pi) { return pi.descent_count() <= 1; }

bool is_inverse_grassmannian(const Permutation& pi) {
  return pi.inverse().descent_count() <= 1;
}

CellSet essential_boxes(const Permutation& pi) {
  const CellSet blanks = rothe_diagram(pi).blanks;
  CellSet boxes;
  for (const Cell& c : blanks)
    if (!blanks.contains(Cell{c.row + 1, c.col}) && !blanks.contains(Cell{c.row, c.col + 1}))
      boxes.insert(c);
  return boxes;
}

CellSet dominant_region(const Permutation& pi) {
  const CellSet blanks = rothe_diagram(pi).blanks;
  if (!blanks.contains(Cell{1, 1})) return {};
  for (const CellSet& comp : connected_components(blanks))
    if (comp.contains(Cell{1, 1})) return comp;
  return {};
}

namespace {

// Local coordinates of a component union, anchored at (top,left) = (1,1).
CellSet translate(const CellSet& cells, int top, int left) {
  CellSet out;
  for (const Cell& c : cells) out.insert(Cell{c.row - top + 1, c.col - left + 1});
  return out;
}

Permutation perm_from_blanks(const CellSet& local_blanks, int m, const char* what) {
  std::vector<int> code(static_cast<std::size_t>(m), 0);
  for (const Cell& c : local_blanks) {
    if (c.row < 1 || c.row > m || c.col < 1 || c.col > m)
      throw std::runtime_error(std::string(what) + ": blank outside the block rectangle");
    ++code[static_cast<std::size_t>(c.row) - 1];
  }
  Permutation sigma = Permutation::from_lehmer_code(code);
  if (rothe_diagram(sigma).blanks != local_blanks)
    throw std::runtime_error(std::string(what) +
                             ": block blanks are not a Rothe diagram of the read permutation");
  return sigma;
}

}  // namespace

BlockDecomposition block_decomposition(const Permutation& pi) {
  if (contains_pattern(pi, Permutation({1, 4, 3, 2})))
    throw std::invalid_argument("block decomposition: permutation contains 1432");
  if (contains_pattern(pi, Permutation({2, 1, 4, 3})))
    throw std::invalid_argument("block decomposition: permutation contains 2143");

  const int n = pi.size();
  const CellSet blanks = rothe_diagram(pi).blanks;
  const CellSet dom = dominant_region(pi);
  const std::vector<CellSet> components = connected_components(blanks);

  BlockDecomposition result;
  if (!dom.empty()) {
    if (!is_partition_shaped(dom))
      throw std::runtime_error("block decomposition: dominant region is not partition-shaped");
    result.dominant = partition_row_lengths(dom);
  }

  // Non-dominant essential boxes, NE to SW; same-row and same-column boxes are
  // consecutive in this order for 2143-avoiding permutations.
  std::vector<Cell> boxes;
  for (const Cell& b : essential_boxes(pi))
    if (!dom.contains(b)) boxes.push_back(b);
  std::sort(boxes.begin(), boxes.end());

  enum class Kind { Unknown, Row, Col };
  struct Group {
    Kind kind = Kind::Unknown;
    std::vector<Cell> boxes;
  };
  std::vector<Group> groups;
  for (const Cell& b : boxes) {
    if (!groups.empty()) {
      Group& g = groups.back();
      const Cell& last = g.boxes.back();
      const bool same_row = last.row == b.row;
      const bool same_col = last.col == b.col;
      if (same_row && (g.kind == Kind::Unknown || g.kind == Kind::Row)) {
        g.kind = Kind::Row;
        g.boxes.push_back(b);
        continue;
      }
      if (same_col && (g.kind == Kind::Unknown || g.kind == Kind::Col)) {
        g.kind = Kind::Col;
        g.boxes.push_back(b);
        continue;
      }
      if (same_row || same_col)
        throw std::runtime_error(
            "block decomposition: essential boxes do not split into row/column groups");
    }
    groups.push_back(Group{Kind::Unknown, {b}});
  }

  auto component_of = [&](const Cell& b) -> const CellSet& {
    for (const CellSet& comp : components)
      if (comp.contains(b)) return comp;
    throw std::logic_error("block decomposition: essential box outside every component");
  };

  for (const Group& g : groups) {
    CellSet region;
    for (const Cell& b : g.boxes) {
      const CellSet& comp = component_of(b);
      if (!is_rectangle(comp))
        throw std::runtime_error("block decomposition: non-dominant blank region is not a rectangle");
      region.insert(comp.begin(), comp.end());
    }

    // Singleton groups read as Grassmannian; their block permutation is both
    // Grassmannian and inverse-Grassmannian, so the classification only fixes
    // which factor list carries them.
    if (g.kind == Kind::Col) {
      const int q = g.boxes.front().col;
      int rr = 1;
      while (dom.contains(Cell{rr, q})) ++rr;
      int q_left = 1;
      while (dom.contains(Cell{rr, q_left})) ++q_left;
      const int width = q - q_left + 1;
      int sum_heights = 0;
      for (const Cell& b : g.boxes) {
        const CellSet& comp = component_of(b);
        sum_heights += comp.rbegin()->row - comp.begin()->row + 1;
      }
      const int m = sum_heights + width;
      BlockDecomposition::Block block{Permutation::identity(1), rr, q_left, rr + m - 1, q};
      if (block.bottom > n)
        throw std::runtime_error("block decomposition: block rectangle leaves the grid");
      block.perm = perm_from_blanks(translate(region, block.top, block.left), m,
                                    "block decomposition (column group)");
      if (!is_inverse_grassmannian(block.perm))
        throw std::runtime_error("block decomposition: column block is not inverse-Grassmannian");
      result.inverse_grassmannian.push_back(std::move(block));
    } else {
      const int r = g.boxes.front().row;
      int c = 1;
      while (dom.contains(Cell{r, c})) ++c;
      int r_top = 1;
      while (dom.contains(Cell{r_top, c})) ++r_top;
      const int height = r - r_top + 1;
      int sum_widths = 0;
      for (const Cell& b : g.boxes) {
        const CellSet& comp = component_of(b);
        sum_widths += comp.rbegin()->col - comp.begin()->col + 1;
      }
      const int m = sum_widths + height;
      BlockDecomposition::Block block{Permutation::identity(1), r_top, c, r, c + m - 1};
      if (block.right > n)
        throw std::runtime_error("block decomposition: block rectangle leaves the grid");
      block.perm = perm_from_blanks(translate(region, block.top, block.left), m,
                                    "block decomposition (row group)");
      if (!is_grassmannian(block.perm))
        throw std::runtime_error("block decomposition: row block is not Grassmannian");
      result.grassmannian.push_back(std::move(block));
    }
  }
  return result;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace schubcomb
