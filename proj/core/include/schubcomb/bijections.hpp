#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schubcomb/asm_matrix.hpp"
#include "schubcomb/boolean_triangle.hpp"
#include "schubcomb/bpd.hpp"
#include "schubcomb/monomial.hpp"
#include "schubcomb/permutation.hpp"
#include "schubcomb/pipe_dream.hpp"
#include "schubcomb/poset.hpp"

namespace schubcomb {

// Reduced BPDs with permutation pi, enumerated through ASMs; canonical order.
std::vector<Bpd> all_bpd_red(const Permutation& pi);

// Schubert polynomial from the two tiling formulas: sum of cross weights over
// reduced pipe dreams, and sum of blank weights over reduced BPDs. Both
// require |pi| <= 6.
WeightPolynomial schubert_from_pd(const Permutation& pi);
WeightPolynomial schubert_from_bpd(const Permutation& pi);

struct TheoremMainReport {
  Permutation pi;
  WeightPolynomial tsscpp_side;  // weight multiset of TSSCPP^red(pi)
  WeightPolynomial bpd_side;     // weight multiset of BPD^red(pi)
  bool dominated = false;        // bpd_side coefficient-wise >= tsscpp_side
  bool equal = false;
  bool avoids_1432 = false;
  bool ok = false;  // dominated, and equal whenever pi avoids 1432
};

// Weight-multiset verification of the TSSCPP -> ASM injection: domination for
// every pi, equality when pi avoids 1432.
TheoremMainReport verify_theorem_main(const Permutation& pi);

struct PosetCorrespondence {
  Poset droop;
  Poset slide;
  Poset matched;         // the poset droop was matched against
  std::vector<int> iso;  // droop index -> matched index
};

// droop(pi) = slide(pi) with row weights preserved; pi inverse-Grassmannian.
PosetCorrespondence inv_grass_correspondence(const Permutation& pi);
// droop(pi) = slide(pi)* with row weights reversed (row k to row n-k+1);
// pi Grassmannian.
PosetCorrespondence grass_correspondence(const Permutation& pi);

struct BlockCorrespondenceReport {
  BlockDecomposition decomposition;
  Poset droop;
  Poset block_product;   // product of slide(sigma_i) and slide(tau_j)*
  std::vector<int> iso;  // droop index -> product index
  // Blank cells of each droop element restricted to the block rectangles,
  // inverse-Grassmannian blocks first, then Grassmannian.
  std::vector<std::vector<CellSet>> factorization;
  bool factorization_injective = false;
  std::size_t slide_size = 0;        // |slide(pi)|, reported for comparison
  bool slide_order_matches = false;  // |slide(pi)| == |droop(pi)|
};

// droop(pi) = product over blocks of slide posets / their duals; pi must
// avoid both 1432 and 2143.
BlockCorrespondenceReport block_correspondence(const Permutation& pi);

struct Table1Row {
  int n = 0;
  std::uint64_t perm_bijection = 0;        // triangles with weakly decreasing rows
  std::uint64_t both_avoiding = 0;         // reduced-BPD ASMs, perm avoids 1432 & 2143
  std::uint64_t av1432 = 0;                // reduced-BPD ASMs, perm avoids 1432
  std::uint64_t matched_in_injection = 0;  // triangles with reduced pipe dream
  std::uint64_t total_asm = 0;
};

// Computes one table row; cross-checks the 1432-avoiding column against the
// TSSCPP side and throws on mismatch.
Table1Row table1_row(int n);
std::vector<Table1Row> table1(int max_n);
std::string table1_tsv(const std::vector<Table1Row>& rows);

}  // namespace schubcomb
