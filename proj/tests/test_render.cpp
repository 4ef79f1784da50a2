#include "doctest.h"

#include <string>

#include "tiedarcs/render.hpp"

using namespace tiedarcs;

TEST_CASE("single arc renders as a bracket over its two points") {
  CHECK(render_ascii(ArcDiagram::from_parentheses("()")) == ".1-.\n0  1\n");
}

TEST_CASE("nested pair shows both depths") {
  CHECK(render_ascii(ArcDiagram::from_parentheses("(())")) ==
        ".---2----.\n"
        "|  .1-.  |\n"
        "0  1  2  3\n");
}

TEST_CASE("three-deep nesting keeps verticals aligned") {
  CHECK(render_ascii(ArcDiagram::from_parentheses("((()))")) ==
        ".------3-------.\n"
        "|  .---2----.  |\n"
        "|  |  .1-.  |  |\n"
        "0  1  2  3  4  5\n");
}

TEST_CASE("tb tie renders as a marked row under the baseline") {
  CHECK(render_ascii(TbDiagram::from_text("()()|1")) ==
        ".1-.  .2-.\n"
        "0  1  2  3\n"
        "   *=====*  1-2\n");
}

TEST_CASE("tb tie bit 0 renders no tie row") {
  CHECK(render_ascii(TbDiagram::from_text("()()|0")) ==
        render_ascii(ArcDiagram::from_parentheses("()()")));
}

TEST_CASE("ta ties render one row each, in sorted order") {
  CHECK(render_ascii(TaDiagram::from_text("(())|1-2")) ==
        ".---2----.\n"
        "|  .1-.  |\n"
        "0  1  2  3\n"
        "      *==*  1-2\n");
  CHECK(render_ascii(TaDiagram::from_text("()()()|1-2,2-3")) ==
        ".1-.  .2-.  .3-.\n"
        "0  1  2  3  4  5\n"
        "   *=====*  1-2\n"
        "         *=====*  2-3\n");
}

TEST_CASE("empty diagrams render a placeholder") {
  CHECK(render_ascii(ArcDiagram()) == "(empty)\n");
  CHECK(render_ascii(TaDiagram()) == "(empty)\n");
}

TEST_CASE("rendering is deterministic and structurally sound, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_arc_diagram(n, [&](const ArcDiagram& d) {
      const std::string r = render_ascii(d);
      CHECK(r == render_ascii(d));
      CHECK(r.back() == '\n');
      int corners = 0;
      for (char c : r)
        if (c == '.') ++corners;
      CHECK(corners == 2 * n);  // two corners per arc, labels are digits
      for (size_t i = 0; i + 1 < r.size(); ++i)
        CHECK_FALSE((r[i] == ' ' && r[i + 1] == '\n'));  // no trailing blanks
    });
  }
}
