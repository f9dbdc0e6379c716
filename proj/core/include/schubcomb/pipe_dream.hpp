#pragma once

#include <compare>
#include <cstdint>
#include <functional>
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

// Pipe dream on the size-n staircase. Crosses may occupy cells with
// i + j <= n; the antidiagonal cells i + j = n + 1 are always elbows. Elbows
// join north-west and south-east within a cell; crosses pass both strands
// straight through. Crosses are stored as a bitset over the n(n-1)/2
// crossable cells, row-major.
class PipeDream {
 public:
  PipeDream(int n, std::uint64_t cross_bits);
  PipeDream(int n, const CellSet& crosses);
  static PipeDream empty(int n) { return PipeDream(n, std::uint64_t{0}); }
  static PipeDream parse(std::string_view text);

  int size() const { return n_; }
  // Bitset over the staircase cells; requires n <= 11 (64 bits). Larger pipe
  // dreams are held in 128 bits internally.
  std::uint64_t bits() const;
  bool has_cross(int i, int j) const;  // 1-based; false outside the staircase
  CellSet crosses() const;
  int cross_count() const;

  Monomial cross_weight() const;  // product of x_i over crosses (i,j)

  std::string str() const;  // n lines; line i has n-i+1 characters over "+."
  std::string key() const;  // single line, rows joined by '/'

  auto operator<=>(const PipeDream&) const = default;

  static int staircase_cells(int n) { return n * (n - 1) / 2; }
  static int cell_index(int n, int i, int j);

 private:
  friend std::vector<PipeDream> simple_slides(const PipeDream&);
  friend std::vector<PipeDream> inverse_simple_slides(const PipeDream&);

  int n_;
  unsigned __int128 bits_;
};

// Bounded compatible sequence (a, r): r weakly decreasing, a_i >= r_i, and
// r_i > r_{i+1} whenever a_i >= a_{i+1}.
struct BoundedCompatibleSequence {
  std::vector<int> a;
  std::vector<int> r;
  bool operator==(const BoundedCompatibleSequence&) const = default;
};

void validate_sequence(const BoundedCompatibleSequence& seq);  // throws when invalid

// Scans rows bottom to top, left to right; a cross at (r,c) contributes the
// entry (r+c-1, r).
BoundedCompatibleSequence pd_to_sequence(const PipeDream& pd);
// Inverse: a cross at (r_i, a_i + 1 - r_i) per entry; requires a_i <= n - 1.
PipeDream sequence_to_pd(const BoundedCompatibleSequence& seq, int n);

struct PdRouting {
  // paths[k] lists the cells pipe k+1 visits, from the north border to the
  // west border. Pipes are labeled 1..n at the north border.
  std::vector<std::vector<Cell>> paths;
  std::map<Cell, std::pair<int, int>> crossings;
  // exit_row_pipe[r-1] = label of the pipe leaving west at row r.
  std::vector<int> exit_row_pipe;
};

PdRouting trace(const PipeDream& pd);
bool is_reduced(const PipeDream& pd);
// West-border labels top to bottom; requires a reduced pipe dream.
Permutation permutation(const PipeDream& pd);

// 1 + cnt(k,j) >= cnt(k,j+1) for all prefixes k and 1 <= j <= n-2, where
// cnt(k,j) counts the entries equal to j among a_1..a_k.
bool is_pseudo_yamanouchi(const BoundedCompatibleSequence& seq, int n);
bool is_pseudo_yamanouchi(const PipeDream& pd);

// Lehmer code crosses, left-justified per row.
PipeDream bottom_pd(const Permutation& pi);
// Unique maximal element of slide_poset(pi); requires pi to avoid 1432.
// The result has all its crosses top-justified in their columns.
PipeDream top_pd(const Permutation& pi);

// All results of moving one cross from (r,c) to (r-1,c+1) across a 2x2 square
// of elbows, and the inverse moves.
std::vector<PipeDream> simple_slides(const PipeDream& pd);
std::vector<PipeDream> inverse_simple_slides(const PipeDream& pd);

// Closure of simple slides from the bottom pipe dream; elements are labeled
// by their cross weight, the bottom pipe dream is the unique minimal element.
Poset slide_poset(const Permutation& pi);

// All 2^(n(n-1)/2) pipe dreams in increasing bit order; n <= 7.
void enumerate_pd(int n, const std::function<void(const PipeDream&)>& yield);
// Reduced pipe dreams with permutation pi, in the same order.
void enumerate_pd_red(const Permutation& pi, const std::function<void(const PipeDream&)>& yield);
std::vector<PipeDream> all_pd_red(const Permutation& pi);

}  // namespace schubcomb
