#include "schubcomb/boolean_triangle.hpp"

#include <stdexcept>

namespace schubcomb {

namespace {

inline std::size_t entry_index(int n, int i, int j) {
  // Row i holds entries for columns n-i .. n-1.
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(i) / 2 +
         static_cast<std::size_t>(j - (n - i));
}

}  // namespace

BooleanTriangle::BooleanTriangle(int n, std::vector<std::uint8_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw std::invalid_argument("boolean triangle: order must be >= 1");
  const std::size_t expected = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
  if (entries_.size() != expected)
    throw std::invalid_argument("boolean triangle: entry count does not match the order");
  for (std::uint8_t e : entries_)
    if (e > 1) throw std::invalid_argument("boolean triangle: entries must be 0 or 1");
  // The (i,j)-inequality compares columns n-j and n-j-1 through row i.
  for (int i = 2; i <= n_ - 1; ++i) {
    for (int j = 1; j < i; ++j) {
      int lhs = 1, rhs = 0;
      for (int k = j + 1; k <= i; ++k) lhs += at(k, n_ - j - 1);
      for (int k = j; k <= i; ++k) rhs += at(k, n_ - j);
      if (lhs < rhs)
        throw std::invalid_argument("boolean triangle: the (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") inequality fails");
    }
  }
}

BooleanTriangle BooleanTriangle::zeros(int n) {
  return BooleanTriangle(
      n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2, 0));
}

BooleanTriangle BooleanTriangle::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n' || c == '/') {
      lines.push_back(std::move(current));
      current.clear();
    } else if (c != '\r' && c != ' ') {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  const int n = static_cast<int>(lines.size()) + 1;
  std::vector<std::uint8_t> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (int i = 1; i <= n - 1; ++i) {
    const std::string& line = lines[static_cast<std::size_t>(i) - 1];
    if (static_cast<int>(line.size()) != i)
      throw std::invalid_argument("boolean triangle: row " + std::to_string(i) + " must have " +
                                  std::to_string(i) + " entries");
    for (char c : line) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("boolean triangle: entries must be 0 or 1");
      entries.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  }
  return BooleanTriangle(n, std::move(entries));
}

int BooleanTriangle::at(int i, int j) const {
  if (i < 1 || i > n_ - 1 || j < n_ - i || j > n_ - 1) return 0;
  return entries_[entry_index(n_, i, j)];
}

CellSet BooleanTriangle::ones() const {
  CellSet out;
  for (int i = 1; i <= n_ - 1; ++i)
    for (int j = n_ - i; j <= n_ - 1; ++j)
      if (at(i, j) == 1) out.insert(Cell{i, j});
  return out;
}

bool BooleanTriangle::weakly_decreasing_rows() const {
  for (int i = 1; i <= n_ - 1; ++i)
    for (int j = n_ - i; j < n_ - 1; ++j)
      if (at(i, j) < at(i, j + 1)) return false;
  return true;
}

Monomial BooleanTriangle::weight() const {
  Monomial w;
  for (const Cell& c : ones()) w *= Monomial::var(n_ - c.row);
  return w;
}

std::string BooleanTriangle::str() const {
  std::string out;
  for (int i = 1; i <= n_ - 1; ++i) {
    for (int j = n_ - i; j <= n_ - 1; ++j) out += static_cast<char>('0' + at(i, j));
    out += '\n';
  }
  return out;
}

std::string BooleanTriangle::key() const {
  std::string out;
  for (int i = 1; i <= n_ - 1; ++i) {
    if (i > 1) out += '/';
    for (int j = n_ - i; j <= n_ - 1; ++j) out += static_cast<char>('0' + at(i, j));
  }
  return out;
}

namespace {

// Shared DFS over rows with exact pruning: after placing b_{i,c} the
// (i, n-c)-inequality involves only entries already placed.
template <class Leaf>
void triangle_dfs(int n, Leaf&& leaf) {
  std::vector<std::uint8_t> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  std::vector<int> colsum(static_cast<std::size_t>(n), 0);  // colsum[c-1]

  auto place_row = [&](auto&& self, int i, int c) -> void {
    if (i == n) {
      leaf(entries);
      return;
    }
    if (c == n) {
      self(self, i + 1, n - (i + 1) < 1 ? 1 : n - (i + 1));
      return;
    }
    for (std::uint8_t bit = 0; bit <= 1; ++bit) {
      colsum[static_cast<std::size_t>(c) - 1] += bit;
      const bool ok = c <= n - i ||
                      colsum[static_cast<std::size_t>(c) - 1] <=
                          1 + colsum[static_cast<std::size_t>(c) - 2];
      if (ok) {
        entries.push_back(bit);
        self(self, i, c + 1);
        entries.pop_back();
      }
      colsum[static_cast<std::size_t>(c) - 1] -= bit;
    }
  };
  if (n == 1) {
    leaf(entries);
    return;
  }
  place_row(place_row, 1, n - 1);
}

}  // namespace

void enumerate_triangles(int n, const std::function<void(const BooleanTriangle&)>& yield) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_triangles: n must be in 1..7");
  triangle_dfs(n, [&](const std::vector<std::uint8_t>& entries) {
    yield(BooleanTriangle(n, entries));
  });
}

std::uint64_t count_triangles(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("count_triangles: n must be in 1..7");
  std::uint64_t count = 0;
  triangle_dfs(n, [&](const std::vector<std::uint8_t>&) { ++count; });
  return count;
}

PipeDream triangle_to_pd(const BooleanTriangle& t) {
  const int n = t.order();
  CellSet crosses;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j)
      if (t.at(n - i, i + j - 1) == 1) crosses.insert(Cell{i, j});
  return PipeDream(n, crosses);
}

BooleanTriangle pd_to_triangle(const PipeDream& pd) {
  const int n = pd.size();
  std::vector<std::uint8_t> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = n - i; j <= n - 1; ++j)
      entries.push_back(pd.has_cross(n - i, j - n + i + 1) ? 1 : 0);
  // Validation failure here means the pipe dream is not pseudo-Yamanouchi.
  return BooleanTriangle(n, std::move(entries));
}

std::vector<BooleanTriangle> tsscpp_red(const Permutation& pi) {
  std::vector<BooleanTriangle> out;
  enumerate_triangles(pi.size(), [&](const BooleanTriangle& t) {
    const PipeDream pd = triangle_to_pd(t);
    if (pd.cross_count() != pi.inversions()) return;
    if (!is_reduced(pd)) return;
    if (trace(pd).exit_row_pipe == pi.word()) out.push_back(t);
  });
  return out;
}

}  // namespace schubcomb
