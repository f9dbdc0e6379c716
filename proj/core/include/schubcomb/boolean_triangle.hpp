#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "schubcomb/cell.hpp"
#include "schubcomb/monomial.hpp"
#include "schubcomb/permutation.hpp"
#include "schubcomb/pipe_dream.hpp"

namespace schubcomb {

// TSSCPP boolean triangle of order n: entries b_{i,j} in {0,1} for
// 1 <= i <= n-1, n-i <= j <= n-1, whose diagonal partial sums satisfy the
// (i,j)-inequality 1 + sum_{k=j+1..i} b_{k,n-j-1} >= sum_{k=j..i} b_{k,n-j}
// for all 1 <= j < i <= n-1.
class BooleanTriangle {
 public:
  BooleanTriangle(int n, std::vector<std::uint8_t> entries);  // row-major; validates
  static BooleanTriangle zeros(int n);
  // n-1 lines; line i is the 0/1 string b_{i,n-i} ... b_{i,n-1}. The empty
  // text parses as the order-1 triangle.
  static BooleanTriangle parse(std::string_view text);

  int order() const { return n_; }
  int at(int i, int j) const;  // b_{i,j}; 0 outside the triangle
  CellSet ones() const;        // indices (i,j) of the 1 entries
  bool weakly_decreasing_rows() const;

  Monomial weight() const;  // product of x_{n-i} over ones

  std::string str() const;
  std::string key() const;

  auto operator<=>(const BooleanTriangle&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> entries_;  // row i holds i entries
};

// All boolean triangles of order n, in lexicographic order by the row-major
// entry sequence; 1 <= n <= 7.
void enumerate_triangles(int n, const std::function<void(const BooleanTriangle&)>& yield);
std::uint64_t count_triangles(int n);

// Flip vertically and left-justify: the pipe dream has a cross at (i,j) iff
// b_{n-i, i+j-1} = 1. Weight-preserving.
PipeDream triangle_to_pd(const BooleanTriangle& t);
// Inverse; throws when the pipe dream is not pseudo-Yamanouchi (the
// translated inequalities fail).
BooleanTriangle pd_to_triangle(const PipeDream& pd);

// Triangles whose pipe dream is reduced with permutation pi.
std::vector<BooleanTriangle> tsscpp_red(const Permutation& pi);

}  // namespace schubcomb
