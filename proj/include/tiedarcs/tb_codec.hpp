#pragma once
// Arc diagrams whose successive top arcs may carry a tie ("tb diagrams"),
// and the bijective codec between the n-point tb diagrams and the n-element
// subsets of {1..2n-1}.
//
// Encoding walks the blocks left to right: a block whose top arc is tied to
// its predecessor is "reversed" and contributes the left endpoints of its
// arcs, every other block contributes the right endpoints.  Decoding reads
// the +-1 sign sequence of the subset: zeros of its prefix sum delimit the
// blocks, the sign at a block's first point fixes the block's orientation,
// and matched-pair parsing inside the block recovers the arcs.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tiedarcs/arc_diagram.hpp"

namespace tiedarcs {

struct TbDiagram {
  ArcDiagram base;
  // ties[i] != 0 means a tie between top arcs i+1 and i+2; the vector always
  // has length max(#blocks - 1, 0).
  std::vector<std::uint8_t> ties;

  std::string to_text() const;  // "<parens>|<tie bits>", e.g. "()()|1"
  static TbDiagram from_text(std::string_view s);  // ParseError

  friend bool operator==(const TbDiagram&, const TbDiagram&) = default;
};

// The +-1 sequence of a combination: +1 exactly at the members, and its
// prefix sums.  Valid combinations (n distinct values in {1..2n-1}) give
// values[0] = -1 and prefix[2n-1] = 0.
struct SignSequence {
  std::vector<int> values;
  std::vector<int> prefix;
  static SignSequence from_combination(const std::vector<int>& c, int n);
};

// Every tb diagram with n arcs: bases in lexicographic order, and for each
// base the tie vectors in binary-counter order (ties[0] least significant).
void for_each_tb_diagram(int n,
                         const std::function<void(const TbDiagram&)>& visit);

// Every ascending n-element subset of {1..2n-1}, in lexicographic order.
void for_each_combination(
    int n, const std::function<void(const std::vector<int>&)>& visit);

// The n-element subset of {1..2n-1} encoding d, sorted ascending.
std::vector<int> encode_combination(const TbDiagram& d);

// Inverse of encode_combination; total on valid n-element subsets of
// {1..2n-1}, throws ParseError/std::invalid_argument on anything else.
TbDiagram decode_combination(const std::vector<int>& c, int n);

std::string combination_to_text(const std::vector<int>& c);  // "2,4,5"
std::vector<int> parse_combination(std::string_view s);      // ParseError

}  // namespace tiedarcs
