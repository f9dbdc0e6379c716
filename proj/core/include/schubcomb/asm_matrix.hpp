#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "schubcomb/bpd.hpp"
#include "schubcomb/cell.hpp"
#include "schubcomb/monomial.hpp"
#include "schubcomb/permutation.hpp"

namespace schubcomb {

// Alternating sign matrix: entries in {-1,0,1}, every row and column sums to
// 1, and nonzero entries alternate in sign along each row and each column.
class Asm {
 public:
  Asm(int n, std::vector<std::int8_t> entries);  // row-major; validates
  static Asm from_rows(const std::vector<std::vector<int>>& rows);
  static Asm identity(int n);
  static Asm permutation_matrix(const Permutation& pi);  // 1 at (i, pi(i))

  // One row per line, entries separated by single spaces.
  static Asm parse(std::string_view text);
  std::string str() const;

  int size() const { return n_; }
  int at(int i, int j) const {  // 1-based
    return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j - 1)];
  }

  // Zeros whose partial row and column sums through the cell are both 0;
  // equivalently the zeros that are north and west of 1 entries.
  CellSet nw_zeros() const;
  int positive_inversions() const;
  Monomial weight() const;  // product of x_i over nw_zeros

  auto operator<=>(const Asm&) const = default;

 private:
  int n_;
  std::vector<std::int8_t> entries_;
};

// Streams every n x n ASM exactly once, in lexicographic order by the
// row-major entry sequence (-1 < 0 < 1). Requires 1 <= n <= 8.
void enumerate_asm(int n, const std::function<void(const Asm&)>& yield);
// Row-transition DP over partial column sums; no matrices materialized.
std::uint64_t count_asm(int n);
std::vector<Asm> all_asms(int n);

// SE elbow at each +1, NW elbow at each -1; at zeros the partial row/column
// sums through the cell decide the horizontal/vertical strands. Blank tiles
// of the result are exactly nw_zeros.
Bpd asm_to_bpd(const Asm& a);
// 1 at SE elbows, -1 at NW elbows, 0 elsewhere.
Asm bpd_to_asm(const Bpd& d);

}  // namespace schubcomb
