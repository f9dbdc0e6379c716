#include "schubcomb/asm_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace schubcomb {

Asm::Asm(int n, std::vector<std::int8_t> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw std::invalid_argument("asm: size must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
    throw std::invalid_argument("asm: entry array does not match the matrix size");
  for (std::int8_t e : entries_)
    if (e < -1 || e > 1) throw std::invalid_argument("asm: entries must be in {-1,0,1}");
  // Partial sums in {0,1} with total 1 is equivalent to unit sums with
  // alternating nonzero signs starting and ending with +1.
  for (int i = 1; i <= n_; ++i) {
    int partial = 0;
    for (int j = 1; j <= n_; ++j) {
      partial += at(i, j);
      if (partial < 0 || partial > 1)
        throw std::invalid_argument("asm: row " + std::to_string(i) +
                                    " violates the alternating sign condition");
    }
    if (partial != 1)
      throw std::invalid_argument("asm: row " + std::to_string(i) + " does not sum to 1");
  }
  for (int j = 1; j <= n_; ++j) {
    int partial = 0;
    for (int i = 1; i <= n_; ++i) {
      partial += at(i, j);
      if (partial < 0 || partial > 1)
        throw std::invalid_argument("asm: column " + std::to_string(j) +
                                    " violates the alternating sign condition");
    }
    if (partial != 1)
      throw std::invalid_argument("asm: column " + std::to_string(j) + " does not sum to 1");
  }
}

Asm Asm::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::int8_t> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("asm: matrix is not square");
    for (int e : row) {
      if (e < -1 || e > 1) throw std::invalid_argument("asm: entries must be in {-1,0,1}");
      entries.push_back(static_cast<std::int8_t>(e));
    }
  }
  return Asm(n, std::move(entries));
}

Asm Asm::identity(int n) { return permutation_matrix(Permutation::identity(n)); }

Asm Asm::permutation_matrix(const Permutation& pi) {
  const int n = pi.size();
  std::vector<std::int8_t> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    entries[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(pi(i) - 1)] = 1;
  return Asm(n, std::move(entries));
}

Asm Asm::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row_in(line);
    std::vector<int> row;
    int v;
    while (row_in >> v) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

std::string Asm::str() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(at(i, j));
    }
    out += '\n';
  }
  return out;
}

CellSet Asm::nw_zeros() const {
  CellSet out;
  for (int i = 1; i <= n_; ++i) {
    int row_partial = 0;
    for (int j = 1; j <= n_; ++j) {
      row_partial += at(i, j);
      if (at(i, j) != 0 || row_partial != 0) continue;
      int col_partial = 0;
      for (int k = 1; k <= i; ++k) col_partial += at(k, j);
      if (col_partial == 0) out.insert(Cell{i, j});
    }
  }
  return out;
}

int Asm::positive_inversions() const { return static_cast<int>(nw_zeros().size()); }

Monomial Asm::weight() const {
  Monomial w;
  for (const Cell& c : nw_zeros()) w *= Monomial::var(c.row);
  return w;
}

namespace {

using Mask = std::uint32_t;

// Valid next rows from a partial-column-sum state: the row entries are
// S'_j - S_j, and the nonzero entries must read +1,-1,...,+1 left to right.
// A +1 needs S_j = 0 and a -1 needs S_j = 1, so rows correspond to
// interleaved position sequences p1 < m1 < p2 < ... < p_{k+1}.
std::vector<std::pair<std::vector<std::int8_t>, Mask>> next_rows(int n, Mask state) {
  std::vector<std::pair<std::vector<std::int8_t>, Mask>> rows;
  std::vector<std::int8_t> r(static_cast<std::size_t>(n), 0);
  // last_sign: 0 none yet, +1 / -1 the last nonzero placed. A row is complete
  // when it ends on +1, which forces the unit sum.
  auto walk = [&](auto&& self, int col, Mask current, int last_sign) -> void {
    if (col == n) {
      if (last_sign == 1) rows.emplace_back(r, current);
      return;
    }
    const Mask bit = Mask{1} << col;
    r[static_cast<std::size_t>(col)] = 0;
    self(self, col + 1, current, last_sign);
    if (last_sign <= 0 && !(state & bit)) {
      r[static_cast<std::size_t>(col)] = 1;
      self(self, col + 1, current | bit, 1);
      r[static_cast<std::size_t>(col)] = 0;
    }
    if (last_sign == 1 && (state & bit)) {
      r[static_cast<std::size_t>(col)] = -1;
      self(self, col + 1, current & ~bit, -1);
      r[static_cast<std::size_t>(col)] = 0;
    }
  };
  walk(walk, 0, state, 0);
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

void enumerate_asm(int n, const std::function<void(const Asm&)>& yield) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_asm: n must be in 1..8");
  // Per-state successor cache; states are the 0/1 column partial sums.
  std::map<Mask, std::vector<std::pair<std::vector<std::int8_t>, Mask>>> cache;
  auto successors = [&](Mask state) -> const auto& {
    auto it = cache.find(state);
    if (it == cache.end()) it = cache.emplace(state, next_rows(n, state)).first;
    return it->second;
  };
  const Mask full = (Mask{1} << n) - 1;
  std::vector<std::int8_t> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int row, Mask state) -> void {
    if (row == n) {
      if (state == full) yield(Asm(n, entries));
      return;
    }
    for (const auto& [r, next_state] : successors(state)) {
      entries.insert(entries.end(), r.begin(), r.end());
      self(self, row + 1, next_state);
      entries.resize(entries.size() - static_cast<std::size_t>(n));
    }
  };
  rec(rec, 0, 0);
}

std::uint64_t count_asm(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("count_asm: n must be in 1..8");
  const Mask full = (Mask{1} << n) - 1;
  std::map<Mask, std::uint64_t> current{{Mask{0}, 1}};
  for (int row = 0; row < n; ++row) {
    std::map<Mask, std::uint64_t> next;
    for (const auto& [state, count] : current)
      for (const auto& [r, next_state] : next_rows(n, state)) next[next_state] += count;
    current = std::move(next);
  }
  auto it = current.find(full);
  return it == current.end() ? 0 : it->second;
}

std::vector<Asm> all_asms(int n) {
  std::vector<Asm> out;
  enumerate_asm(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

Bpd asm_to_bpd(const Asm& a) {
  const int n = a.size();
  std::vector<Tile> tiles;
  tiles.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int e = a.at(i, j);
      if (e == 1) {
        tiles.push_back(Tile::SeElbow);
        continue;
      }
      if (e == -1) {
        tiles.push_back(Tile::NwElbow);
        continue;
      }
      int row_partial = 0;
      for (int k = 1; k <= j; ++k) row_partial += a.at(i, k);
      int col_partial = 0;
      for (int k = 1; k <= i; ++k) col_partial += a.at(k, j);
      if (row_partial == 1 && col_partial == 1)
        tiles.push_back(Tile::Cross);
      else if (row_partial == 1)
        tiles.push_back(Tile::Horizontal);
      else if (col_partial == 1)
        tiles.push_back(Tile::Vertical);
      else
        tiles.push_back(Tile::Blank);
    }
  }
  return Bpd(n, std::move(tiles));  // constructor revalidates the tiling
}

Asm bpd_to_asm(const Bpd& d) {
  const int n = d.size();
  std::vector<std::int8_t> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Tile t = d.at(i, j);
      entries.push_back(t == Tile::SeElbow ? std::int8_t{1}
                        : t == Tile::NwElbow ? std::int8_t{-1}
                                             : std::int8_t{0});
    }
  return Asm(n, std::move(entries));
}

}  // namespace schubcomb
