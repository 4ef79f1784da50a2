#pragma once
// Noncrossing perfect matchings of 2n points on a line ("arc diagrams"),
// their parenthesis-string codec, block structure, and exhaustive
// enumeration in lexicographic order with '(' < ')'.
//
// Points are 0-based (0..2n-1).  Arcs are stored sorted by right endpoint
// and indexed 1-based by that order, so "arc i" always means the arc with
// the i-th smallest right endpoint.

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiedarcs/exact_math.hpp"

namespace tiedarcs {

// Malformed textual input; pos is the byte offset of the offending character
// (or the string length when input ends too early).
struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& what, size_t p);
};

struct Arc {
  int left = 0, right = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

class ArcDiagram {
 public:
  ArcDiagram() = default;  // the empty diagram, n = 0

  static ArcDiagram from_parentheses(std::string_view s);     // ParseError
  static ArcDiagram from_arcs(int n, std::vector<Arc> arcs);  // validates

  std::string to_parentheses() const;
  std::string to_json() const;  // {"n": n, "arcs": [[l,r], ...]}

  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int point_count() const { return 2 * static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int i) const;  // 1-based, bounds-checked

  // true iff arc i lies strictly inside arc j (nested below it).
  bool inside(int i, int j) const;

  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;

 private:
  std::vector<Arc> arcs_;  // sorted by right endpoint
};

// The top arcs (arcs nested below no other arc), left to right, plus the
// point span each one covers.  A block is a top arc together with everything
// under it; blocks tile the point range.
struct BlockStructure {
  std::vector<int> top_arcs;               // 1-based arc indices
  std::vector<std::pair<int, int>> spans;  // spans[b] = [first,last] points
  int count() const { return static_cast<int>(top_arcs.size()); }
};
BlockStructure block_structure(const ArcDiagram& d);

// Every diagram with n arcs, lexicographic by parenthesis string.
void for_each_arc_diagram(int n,
                          const std::function<void(const ArcDiagram&)>& visit);
std::vector<ArcDiagram> enumerate_arc_diagrams(int n);

// counts[k-1] = number of n-arc diagrams with exactly k blocks (n >= 1).
std::vector<ExactInt> count_by_blocks(int n);

}  // namespace tiedarcs
