#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tiedarcs/arc_diagram.hpp"
#include "tiedarcs/triangles.hpp"

using namespace tiedarcs;

TEST_CASE("from_parentheses matches the endpoints worked out by hand") {
  ArcDiagram d = ArcDiagram::from_parentheses("(())()");
  REQUIRE(d.arc_count() == 3);
  CHECK(d.arc(1) == Arc{1, 2});
  CHECK(d.arc(2) == Arc{0, 3});
  CHECK(d.arc(3) == Arc{4, 5});

  ArcDiagram flat = ArcDiagram::from_parentheses("()()()");
  CHECK(flat.arc(1) == Arc{0, 1});
  CHECK(flat.arc(2) == Arc{2, 3});
  CHECK(flat.arc(3) == Arc{4, 5});

  ArcDiagram deep = ArcDiagram::from_parentheses("((()))");
  CHECK(deep.arc(1) == Arc{2, 3});
  CHECK(deep.arc(2) == Arc{1, 4});
  CHECK(deep.arc(3) == Arc{0, 5});

  CHECK(ArcDiagram::from_parentheses("").arc_count() == 0);
}

TEST_CASE("from_parentheses rejects malformed strings with a position") {
  // unmatched open: reported at end of input
  try {
    ArcDiagram::from_parentheses("(()");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos == 3);
  }
  // early close
  try {
    ArcDiagram::from_parentheses(")(");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos == 0);
  }
  CHECK_THROWS_AS(ArcDiagram::from_parentheses("(x)"), ParseError);
  CHECK_THROWS_AS(ArcDiagram::from_parentheses("(()))("), ParseError);
}

TEST_CASE("to_parentheses inverts from_parentheses") {
  CHECK(ArcDiagram::from_parentheses("()").to_parentheses() == "()");
  CHECK(ArcDiagram::from_parentheses("(())()").to_parentheses() == "(())()");
  CHECK(ArcDiagram().to_parentheses() == "");
}

TEST_CASE("from_arcs validates and normalizes") {
  // unsorted input is sorted by right endpoint
  ArcDiagram d = ArcDiagram::from_arcs(3, {{4, 5}, {0, 3}, {1, 2}});
  CHECK(d.to_parentheses() == "(())()");

  CHECK_THROWS_AS(ArcDiagram::from_arcs(2, {{0, 1}, {1, 2}}),
                  std::invalid_argument);  // reused point
  CHECK_THROWS_AS(ArcDiagram::from_arcs(2, {{0, 2}, {1, 3}}),
                  std::invalid_argument);  // crossing
  CHECK_THROWS_AS(ArcDiagram::from_arcs(1, {{1, 0}}),
                  std::invalid_argument);  // left >= right
  CHECK_THROWS_AS(ArcDiagram::from_arcs(2, {{0, 1}}),
                  std::invalid_argument);  // wrong arc count
  CHECK_THROWS_AS(ArcDiagram::from_arcs(1, {{0, 2}}),
                  std::invalid_argument);  // point out of range
}

TEST_CASE("nesting predicate") {
  ArcDiagram d = ArcDiagram::from_parentheses("(())()");
  CHECK(d.inside(1, 2));
  CHECK_FALSE(d.inside(2, 1));
  CHECK_FALSE(d.inside(3, 2));
  CHECK_FALSE(d.inside(1, 1));
}

TEST_CASE("enumeration is exhaustive, lexicographic, Catalan-counted") {
  auto v3 = enumerate_arc_diagrams(3);
  REQUIRE(v3.size() == 5);
  std::vector<std::string> got;
  for (const auto& d : v3) got.push_back(d.to_parentheses());
  std::vector<std::string> expect = {"((()))", "(()())", "(())()", "()(())",
                                     "()()()"};
  CHECK(got == expect);

  CHECK(enumerate_arc_diagrams(0).size() == 1);
  CHECK(enumerate_arc_diagrams(1).size() == 1);

  for (int n = 2; n <= 8; ++n) {
    size_t count = 0;
    std::string prev;
    std::set<std::string> seen;
    for_each_arc_diagram(n, [&](const ArcDiagram& d) {
      std::string s = d.to_parentheses();
      if (count) CHECK(prev < s);  // strict lexicographic order
      prev = s;
      seen.insert(s);
      ++count;
      // roundtrip both ways
      CHECK(ArcDiagram::from_parentheses(s) == d);
    });
    CHECK(ExactInt(count) == catalan(n));
    CHECK(seen.size() == count);
  }
}

TEST_CASE("block structure") {
  BlockStructure b = block_structure(ArcDiagram::from_parentheses("(())()"));
  CHECK(b.count() == 2);
  CHECK(b.top_arcs == std::vector<int>{2, 3});
  CHECK(b.spans == std::vector<std::pair<int, int>>{{0, 3}, {4, 5}});

  CHECK(block_structure(ArcDiagram::from_parentheses("((()))")).count() == 1);
  BlockStructure flat = block_structure(ArcDiagram::from_parentheses("()()()"));
  CHECK(flat.count() == 3);
  CHECK(flat.top_arcs == std::vector<int>{1, 2, 3});
  CHECK(block_structure(ArcDiagram()).count() == 0);
}

TEST_CASE("block spans tile the point range and nesting is a forest") {
  for (int n = 1; n <= 7; ++n) {
    for_each_arc_diagram(n, [&](const ArcDiagram& d) {
      BlockStructure b = block_structure(d);
      int next = 0;
      for (auto [lo, hi] : b.spans) {
        CHECK(lo == next);  // disjoint, adjacent, left to right
        CHECK(lo < hi);
        next = hi + 1;
      }
      CHECK(next == d.point_count());
      // each arc is inside at most one immediate parent; count containments
      for (int i = 1; i <= n; ++i) {
        int parents = 0;
        for (int j = 1; j <= n; ++j)
          if (i != j && d.inside(i, j)) ++parents;
        // i has `parents` enclosing arcs; its immediate parent is unique,
        // so enclosing arcs must be totally ordered by nesting.
        std::vector<int> enc;
        for (int j = 1; j <= n; ++j)
          if (i != j && d.inside(i, j)) enc.push_back(j);
        for (size_t a = 0; a < enc.size(); ++a)
          for (size_t bb = a + 1; bb < enc.size(); ++bb)
            CHECK((d.inside(enc[a], enc[bb]) || d.inside(enc[bb], enc[a])));
      }
    });
  }
}

TEST_CASE("count_by_blocks frozen values") {
  std::vector<ExactInt> d4 = count_by_blocks(4);
  CHECK(d4 == std::vector<ExactInt>{5, 5, 3, 1});
  std::vector<ExactInt> d6 = count_by_blocks(6);
  CHECK(d6 == std::vector<ExactInt>{42, 42, 28, 14, 5, 1});
  CHECK(count_by_blocks(1) == std::vector<ExactInt>{1});
}

TEST_CASE("blocks distribute like the reversed catalan triangle rows") {
  Triangle t = catalan_triangle(8);
  for (int n = 1; n <= 8; ++n) {
    std::vector<ExactInt> counts = count_by_blocks(n);
    REQUIRE(counts.size() == static_cast<size_t>(n));
    ExactInt total = 0;
    for (int k = 1; k <= n; ++k) {
      CHECK(counts[k - 1] == t.entry(n, n - k));
      total += counts[k - 1];
    }
    CHECK(total == catalan(n));
  }
}

TEST_CASE("block counts satisfy the tail-sum recurrence") {
  // D_n^k = sum_{j=k-1..n-1} D_{n-1}^j; the j = 0 term is zero for n >= 2.
  for (int n = 2; n <= 8; ++n) {
    std::vector<ExactInt> cur = count_by_blocks(n);
    std::vector<ExactInt> prev = count_by_blocks(n - 1);
    for (int k = 1; k <= n; ++k) {
      ExactInt rhs = 0;
      for (int j = std::max(k - 1, 1); j <= n - 1; ++j) rhs += prev[j - 1];
      CHECK(cur[k - 1] == rhs);
    }
  }
}

TEST_CASE("json form") {
  CHECK(ArcDiagram::from_parentheses("(())()").to_json() ==
        "{\"n\":3,\"arcs\":[[1,2],[0,3],[4,5]]}");
  CHECK(ArcDiagram().to_json() == "{\"n\":0,\"arcs\":[]}");
}
