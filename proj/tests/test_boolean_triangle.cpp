#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "schubcomb/bijections.hpp"
#include "schubcomb/boolean_triangle.hpp"

using namespace schubcomb;

namespace {

// Two order-6 triangles: one breaking the (4,1)-inequality, one satisfying
// every inequality.
const char* kBadTriangle = "1\n11\n100\n1001\n00010\n";
const char* kGoodTriangle = "1\n11\n100\n1011\n00000\n";

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(BooleanTriangle::parse(kGoodTriangle));
  CHECK_NOTHROW(BooleanTriangle::zeros(6));
  CHECK_THROWS_WITH_AS(BooleanTriangle::parse(kBadTriangle),
                       "boolean triangle: the (4,1) inequality fails",
                       std::invalid_argument);
  CHECK_THROWS_AS(BooleanTriangle::parse("1\n1\n"), std::invalid_argument);  // row lengths
  CHECK_THROWS_AS(BooleanTriangle::parse("2\n"), std::invalid_argument);
  CHECK_THROWS_AS(BooleanTriangle(3, {1, 1}), std::invalid_argument);
}

TEST_CASE("order one parses from empty text") {
  const BooleanTriangle t = BooleanTriangle::parse("");
  CHECK(t.order() == 1);
  CHECK(t.str().empty());
}

TEST_CASE("text round trip and accessors") {
  const BooleanTriangle t = BooleanTriangle::parse(kGoodTriangle);
  CHECK(t.order() == 6);
  CHECK(t.str() == kGoodTriangle);
  CHECK(BooleanTriangle::parse(t.key()) == t);
  CHECK(t.at(1, 5) == 1);
  CHECK(t.at(4, 2) == 1);
  CHECK(t.at(4, 3) == 0);
  CHECK(t.at(5, 1) == 0);
  CHECK_FALSE(t.weakly_decreasing_rows());
  CHECK(BooleanTriangle::zeros(4).weakly_decreasing_rows());
}

TEST_CASE("enumeration counts match the ASM counts") {
  const std::vector<std::uint64_t> expected = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) CHECK(count_triangles(n) == expected[static_cast<std::size_t>(n) - 1]);
  int c2 = 0;
  enumerate_triangles(2, [&](const BooleanTriangle&) { ++c2; });
  CHECK(c2 == 2);
  CHECK_THROWS_AS(count_triangles(8), std::invalid_argument);
}

TEST_CASE("weakly decreasing rows count n!") {
  std::uint64_t factorial = 1;
  for (int n = 1; n <= 6; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    std::uint64_t count = 0;
    enumerate_triangles(n, [&](const BooleanTriangle& t) {
      if (t.weakly_decreasing_rows()) ++count;
    });
    CHECK(count == factorial);
  }
}

TEST_CASE("weights") {
  // Triangle with a spread-out set of ones; weight x2^2 x3 x4.
  const BooleanTriangle t = BooleanTriangle::parse("0\n01\n100\n1010\n00000\n");
  CHECK(t.weight() == Monomial::var(2, 2) * Monomial::var(3) * Monomial::var(4));
  CHECK(BooleanTriangle::zeros(5).weight().is_one());
}

TEST_CASE("triangle to pipe dream and back") {
  const BooleanTriangle sample = BooleanTriangle::parse("0\n01\n100\n1010\n00000\n");
  const PipeDream sample_pd = triangle_to_pd(sample);
  CHECK(sample_pd.crosses() == CellSet{{2, 1}, {2, 3}, {3, 1}, {4, 2}});
  CHECK(sample_pd.cross_weight() == sample.weight());

  // Permutation-case triangle: left-justified crosses with weight x1 x3^2 x5.
  const BooleanTriangle perm_case = BooleanTriangle::parse("1\n00\n110\n0000\n10000\n");
  const PipeDream perm_case_pd = triangle_to_pd(perm_case);
  CHECK(perm_case_pd.crosses() == CellSet{{1, 1}, {3, 1}, {3, 2}, {5, 1}});
  CHECK(perm_case.weight() == Monomial::var(1) * Monomial::var(3, 2) * Monomial::var(5));
  CHECK(perm_case_pd.cross_weight() == perm_case.weight());
  CHECK(permutation(perm_case_pd) == Permutation::parse("215364"));

  CHECK(triangle_to_pd(BooleanTriangle::zeros(5)) == PipeDream::empty(5));

  // The fifth 1432 pipe dream is not pseudo-Yamanouchi, so it has no triangle.
  const PipeDream fifth(4, CellSet{{2, 1}, {2, 2}, {1, 2}});
  CHECK_THROWS_AS(pd_to_triangle(fifth), std::invalid_argument);
}

TEST_CASE("round trip over all triangles up to n = 5") {
  for (int n = 1; n <= 5; ++n)
    enumerate_triangles(n, [&](const BooleanTriangle& t) {
      const PipeDream d = triangle_to_pd(t);
      CHECK(pd_to_triangle(d) == t);
      CHECK(d.cross_weight() == t.weight());
    });
}

TEST_CASE("the image of triangle_to_pd is exactly the pseudo-Yamanouchi set, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> image;
    enumerate_triangles(n, [&](const BooleanTriangle& t) {
      image.insert(triangle_to_pd(t).key());
    });
    std::set<std::string> py;
    enumerate_pd(n, [&](const PipeDream& d) {
      if (is_pseudo_yamanouchi(d)) py.insert(d.key());
    });
    CHECK(image == py);
  }
}

TEST_CASE("tsscpp_red") {
  const std::vector<BooleanTriangle> id = tsscpp_red(Permutation::identity(4));
  REQUIRE(id.size() == 1);
  CHECK(id[0] == BooleanTriangle::zeros(4));

  CHECK(tsscpp_red(Permutation::parse("1432")).size() == 4);

  std::size_t total = 0;
  for (const Permutation& pi : symmetric_group(4)) total += tsscpp_red(pi).size();
  CHECK(total == 40);
}
