#pragma once
// Arc diagrams with ties between arbitrary arcs ("ta diagrams"), considered
// up to the partition the ties induce on arc indices.  Provides reduction to
// an irreducible tie set, the standard form and the rewriting that reaches
// it, block segmentation, the one-arc extension generator with its census,
// and the two structural decompositions (splitting off the last block;
// taking a single-block diagram apart into a triple).

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiedarcs/arc_diagram.hpp"

namespace tiedarcs {

class TaDiagram {
 public:
  TaDiagram() = default;  // empty diagram, no arcs, no ties

  // Ties are pairs of 1-based arc indices (order inside a pair is free).
  // Validates each pair: indices in range, distinct, and no third arc has
  // exactly one of the two strictly inside it -- such a tie could not be
  // drawn without crossing that arc.  Duplicate pairs are kept (the diagram
  // is then reducible); throws std::invalid_argument on invalid pairs.
  TaDiagram(ArcDiagram base, std::vector<std::pair<int, int>> ties);

  const ArcDiagram& base() const { return base_; }
  // Normalized: each pair has first < second; pairs sorted, duplicates kept.
  const std::vector<std::pair<int, int>>& ties() const { return ties_; }

  std::string to_text() const;  // "<parens>|i-j,i-j,...", e.g. "(())|1-2"
  static TaDiagram from_text(std::string_view s);  // ParseError
  std::string to_json() const;  // base, ties, and the derived partition

  friend bool operator==(const TaDiagram&, const TaDiagram&) = default;

 private:
  ArcDiagram base_;
  std::vector<std::pair<int, int>> ties_;
};

// Parts sorted by least member, members ascending; singletons included.
using TiePartition = std::vector<std::vector<int>>;

// Connected components of the tie graph on arc indices 1..n.
TiePartition tie_partition(const TaDiagram& d);

// Same base and same tie partition.
bool is_equivalent(const TaDiagram& a, const TaDiagram& b);

// No duplicate ties and no cycles (the tie graph is a forest).
bool is_irreducible(const TaDiagram& d);

// Drop duplicates and break every cycle: keeps a spanning forest of each
// part (first-seen edges in sorted order), preserving base and partition.
TaDiagram reduce(const TaDiagram& d);

// Standard: irreducible, and every arc has at most one tie to a
// higher-indexed arc, at most one to a lower-indexed arc outside it, and at
// most one to a lower-indexed arc inside it.
bool is_standard(const TaDiagram& d);

// Rewrite d to the standard representative of its equivalence class.
// Throws std::runtime_error if the rewrite budget (n^2 steps) is exhausted.
TaDiagram standardize(const TaDiagram& d);

// Blocks of a ta diagram: consecutive top arcs grouped by "two top arcs in
// one part pull in everything between them", iterated to a fixed point.
// Input must be standard (std::invalid_argument otherwise).
struct TaBlocks {
  std::vector<int> top_arcs;                // all top arcs, 1-based indices
  std::vector<std::pair<int, int>> groups;  // [first,last] into top_arcs, 0-based
  std::vector<std::pair<int, int>> spans;   // point span of each block
  int count() const { return static_cast<int>(groups.size()); }
  // Highest-indexed top arc of block g (0-based g): the tie target used when
  // a later arc ties itself to that block.
  int last_top_arc(int g) const { return top_arcs[groups[g].second]; }
};
TaBlocks ta_blocks(const TaDiagram& d);

// All one-arc extensions of a standard diagram with k blocks: the new arc's
// left endpoint goes into one of the k+1 gaps (i blocks stay on its left,
// the rest end up under it), its right endpoint goes after everything;
// optionally one tie to a block on its left and optionally one tie to a
// block under it, always attached to that block's highest-indexed top arc.
// Exactly C(k+3,3) children, every one standard, in the fixed order: gap
// ascending, then left-tie target (none first, then ascending), then
// under-tie target (none first, then ascending).
std::vector<TaDiagram> extend_all(const TaDiagram& d);

struct TaCensus {
  int n = 0;
  ExactInt total = 0;
  std::vector<ExactInt> by_blocks;  // [j-1] = diagrams with j blocks; empty for n=0
};

// Depth-first generation of every standard diagram with n arcs, in the
// extend_all order; returns the census.
TaCensus for_each_standard_ta(int n,
                              const std::function<void(const TaDiagram&)>& visit);
TaCensus standard_ta_census(int n);

// lhs/rhs per block count j = 1..n of the census recurrence
//   B_n^j = sum_{k=j-1..n-1} B_{n-1}^k * C(k-j+3, 2),   with B_0^0 = 1.
std::vector<IdentityPair> block_recurrence_check(int n);

// Shift b's points/indices past a's and join them side by side.
TaDiagram concat(const TaDiagram& a, const TaDiagram& b);

// Split off the last block: d == concat(prefix, last) with last a
// single-block diagram.  Needs a standard, nonempty d.
std::pair<TaDiagram, TaDiagram> split_last_block(const TaDiagram& d);

// Delete the highest-indexed arc and its ties (the inverse of the extension
// step that added it).  Needs n >= 1.
TaDiagram remove_last_arc(const TaDiagram& d);

// Decompose a single-block standard diagram around its last arc a_n:
// D1 = everything left of a_n, D2 = arcs under a_n up to its under-tie
// target, D3 = the rest under a_n.  Inverse of triple_to_one_block.
std::array<TaDiagram, 3> one_block_to_triple(const TaDiagram& d);

// Lay out d1, then a new arc over d2 and d3; tie the new arc to d1's first
// block (if d1 is nonempty) and to d2's last block (if d2 is nonempty).
// The result is a single-block standard diagram.
TaDiagram triple_to_one_block(const TaDiagram& d1, const TaDiagram& d2,
                              const TaDiagram& d3);

}  // namespace tiedarcs
