#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "schubcomb/cell.hpp"

namespace schubcomb {

// Permutation of {1,...,n} in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation from_lehmer_code(const std::vector<int>& code);

  // "14253" for n <= 9, comma-separated ("10,1,2,...") otherwise.
  static Permutation parse(std::string_view text);
  std::string str() const;

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  std::vector<int> descents() const;  // positions i with pi(i) > pi(i+1)
  int descent_count() const;
  std::vector<int> lehmer_code() const;  // code[i-1] = #{j > i : pi(j) < pi(i)}
  int inversions() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

// True iff some subsequence of pi is order-isomorphic to pattern.
bool contains_pattern(const Permutation& pi, const Permutation& pattern);
bool avoids(const Permutation& pi, const Permutation& pattern);

struct RotheDiagram {
  int n = 0;
  // D(pi) = {(i,j) : pi(i) > j and pi^{-1}(j) > i}
  CellSet blanks;
};

RotheDiagram rothe_diagram(const Permutation& pi);

// At most one descent / inverse has at most one descent.
bool is_grassmannian(const Permutation& pi);
bool is_inverse_grassmannian(const Permutation& pi);

// SE-most corners of D(pi): cells (i,j) in D with (i+1,j) and (i,j+1) not in D.
CellSet essential_boxes(const Permutation& pi);
// 4-connected blank component containing (1,1); empty when (1,1) is no blank.
CellSet dominant_region(const Permutation& pi);

struct BlockDecomposition {
  struct Block {
    Permutation perm;
    // Bounding rectangle in the ambient grid, inclusive.
    int top = 0;
    int left = 0;
    int bottom = 0;
    int right = 0;
  };
  std::vector<int> dominant;  // partition row lengths, possibly empty
  std::vector<Block> grassmannian;          // essential boxes share a row
  std::vector<Block> inverse_grassmannian;  // essential boxes share a column
};

// Dominant partition plus Grassmannian / inverse-Grassmannian blocks of the
// Rothe diagram. Requires pi to avoid both 1432 and 2143.
BlockDecomposition block_decomposition(const Permutation& pi);

// All of S_n in lexicographic order.
std::vector<Permutation> symmetric_group(int n);

}  // namespace schubcomb
