#include "doctest.h"

#include <string>
#include <vector>

#include "tiedarcs/triangles.hpp"

using namespace tiedarcs;

namespace {

// Frozen tables, transcribed digit by digit from the printed tables the
// recurrences must reproduce.
const long long kCatalanRows[9][9] = {
    {1},
    {1, 0},
    {1, 1, 0},
    {1, 2, 2, 0},
    {1, 3, 5, 5, 0},
    {1, 4, 9, 14, 14, 0},
    {1, 5, 14, 28, 42, 42, 0},
    {1, 6, 20, 48, 90, 132, 132, 0},
    {1, 7, 27, 75, 165, 297, 429, 429, 0},
};

const long long kFussRows[9][9] = {
    {1},
    {1, 0},
    {1, 3, 0},
    {1, 6, 15, 0},
    {1, 9, 39, 91, 0},
    {1, 12, 72, 272, 612, 0},
    {1, 15, 114, 570, 1995, 4389, 0},
    {1, 18, 165, 1012, 4554, 15180, 32890, 0},
    {1, 21, 225, 1625, 8775, 36855, 118755, 254475, 0},
};

}  // namespace

TEST_CASE("catalan triangle reproduces the frozen table") {
  Triangle t = catalan_triangle(8);
  REQUIRE(t.max_row() == 8);
  for (int n = 0; n <= 8; ++n) {
    REQUIRE(t.row(n).size() == static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) CHECK(t.entry(n, k) == kCatalanRows[n][k]);
  }
  CHECK(t.entry(8, 4) == 165);
}

TEST_CASE("fuss triangle reproduces the frozen table") {
  Triangle f = fuss_triangle(8);
  for (int n = 0; n <= 8; ++n) {
    REQUIRE(f.row(n).size() == static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) CHECK(f.entry(n, k) == kFussRows[n][k]);
  }
  CHECK(f.entry(5, 2) == 72);
  CHECK(f.entry(4, 1) == 9);
}

TEST_CASE("degenerate triangle: one row") {
  Triangle t = catalan_triangle(0);
  CHECK(t.max_row() == 0);
  CHECK(t.entry(0, 0) == 1);
  Triangle f = fuss_triangle(0);
  CHECK(f.entry(0, 0) == 1);
}

TEST_CASE("bounds checking on row/entry") {
  Triangle t = catalan_triangle(3);
  CHECK_THROWS_AS(t.entry(4, 0), std::out_of_range);
  CHECK_THROWS_AS(t.entry(2, 3), std::out_of_range);
  CHECK_THROWS_AS(t.entry(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(t.row(4), std::out_of_range);
}

TEST_CASE("catalan rows also satisfy the partial-sum form of the recurrence") {
  // T(n,k) = sum_{j=0..k} T(n-1,j): equivalent to the two-term recurrence.
  Triangle t = catalan_triangle(20);
  for (int n = 2; n <= 20; ++n)
    for (int k = 1; k < n; ++k) {
      ExactInt s = 0;
      for (int j = 0; j <= k; ++j) s += t.entry(n - 1, j);
      CHECK(t.entry(n, k) == s);
    }
}

TEST_CASE("catalan row identities: edge and row sum") {
  Triangle t = catalan_triangle(20);
  auto r5 = catalan_row_identities(t, 5);
  CHECK(r5.edge == 14);
  CHECK(r5.edge_expected == 14);
  CHECK(r5.rowsum == 42);
  CHECK(r5.rowsum_expected == 42);
  auto r8 = catalan_row_identities(t, 8);
  CHECK(r8.edge == 429);
  CHECK(r8.edge_expected == 429);
  CHECK(r8.rowsum == 1430);
  CHECK(r8.rowsum_expected == 1430);
  auto r1 = catalan_row_identities(t, 1);
  CHECK(r1.edge == 1);
  CHECK(r1.rowsum == 1);
  for (int n = 1; n <= 20; ++n) CHECK(catalan_row_identities(t, n).holds());
}

TEST_CASE("weighted row sum against the central-ish binomial") {
  Triangle t = catalan_triangle(30);
  auto r3 = weighted_row_sum(t, 3);
  CHECK(r3.lhs == 10);
  CHECK(r3.rhs == 10);
  auto r6 = weighted_row_sum(t, 6);
  CHECK(r6.lhs == 462);
  CHECK(r6.rhs == 462);
  auto r1 = weighted_row_sum(t, 1);
  CHECK(r1.lhs == 1);
  CHECK(r1.rhs == 1);
  for (int n = 1; n <= 30; ++n) CHECK(weighted_row_sum(t, n).holds());
}

TEST_CASE("fuss row identities: sum, weighted sum, edge") {
  Triangle f = fuss_triangle(20);
  auto r2 = fuss_row_identities(f, 2);
  CHECK(r2.sum == 4);
  CHECK(r2.sum_expected == 4);
  CHECK(r2.wsum == 22);
  CHECK(r2.wsum_expected == 22);
  CHECK(r2.edge == 3);
  CHECK(r2.edge_expected == 3);
  auto r4 = fuss_row_identities(f, 4);
  CHECK(r4.sum == 140);
  CHECK(r4.sum_expected == 140);
  CHECK(r4.wsum == 969);
  CHECK(r4.wsum_expected == 969);
  CHECK(r4.edge == 91);
  CHECK(r4.edge_expected == 91);
  auto r1 = fuss_row_identities(f, 1);
  CHECK(r1.sum == 1);
  CHECK(r1.wsum == 4);
  CHECK(r1.edge == 1);
  for (int n = 1; n <= 20; ++n) CHECK(fuss_row_identities(f, n).holds());
}

TEST_CASE("identity checks reject a triangle of the wrong kind") {
  Triangle f = fuss_triangle(5);
  CHECK_THROWS_AS(catalan_row_identities(f, 3), std::invalid_argument);
  Triangle t = catalan_triangle(5);
  CHECK_THROWS_AS(fuss_row_identities(t, 3), std::invalid_argument);
}

TEST_CASE("csv serialization is byte-exact") {
  CHECK(catalan_triangle(0).to_csv() == "1\n");
  CHECK(catalan_triangle(4).to_csv() == "1\n1,0\n1,1,0\n1,2,2,0\n1,3,5,5,0\n");
  CHECK(fuss_triangle(0).to_csv() == "1\n");
  std::string f5 = fuss_triangle(5).to_csv();
  CHECK(f5 ==
        "1\n1,0\n1,3,0\n1,6,15,0\n1,9,39,91,0\n1,12,72,272,612,0\n");
}

TEST_CASE("json serialization uses decimal strings") {
  CHECK(catalan_triangle(1).to_json() == "[[\"1\"],[\"1\",\"0\"]]");
  CHECK(fuss_triangle(2).to_json() ==
        "[[\"1\"],[\"1\",\"0\"],[\"1\",\"3\",\"0\"]]");
}
