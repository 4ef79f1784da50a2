#include "tiedarcs/arc_diagram.hpp"

#include <algorithm>
#include <sstream>

namespace tiedarcs {

ParseError::ParseError(const std::string& what, size_t p)
    : std::runtime_error(what + " (at position " + std::to_string(p) + ")"),
      pos(p) {}

ArcDiagram ArcDiagram::from_parentheses(std::string_view s) {
  ArcDiagram d;
  std::vector<int> stack;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      stack.push_back(static_cast<int>(i));
    } else if (s[i] == ')') {
      if (stack.empty()) throw ParseError("unmatched ')'", i);
      d.arcs_.push_back({stack.back(), static_cast<int>(i)});
      stack.pop_back();
    } else {
      throw ParseError("expected '(' or ')'", i);
    }
  }
  if (!stack.empty()) throw ParseError("unmatched '('", s.size());
  // arcs were appended in order of right endpoint already
  return d;
}

ArcDiagram ArcDiagram::from_arcs(int n, std::vector<Arc> arcs) {
  if (n < 0 || arcs.size() != static_cast<size_t>(n))
    throw std::invalid_argument("from_arcs: expected exactly n arcs");
  std::string s(2 * static_cast<size_t>(n), '.');
  for (const Arc& a : arcs) {
    if (a.left < 0 || a.right >= 2 * n || a.left >= a.right)
      throw std::invalid_argument("from_arcs: endpoints out of order or range");
    if (s[a.left] != '.' || s[a.right] != '.')
      throw std::invalid_argument("from_arcs: point used twice");
    s[a.left] = '(';
    s[a.right] = ')';
  }
  // every point covered (perfect matching) -- implied by the counts above,
  // but nesting/noncrossing still needs the stack check
  ArcDiagram d;
  try {
    d = from_parentheses(s);
  } catch (const ParseError&) {
    throw std::invalid_argument("from_arcs: endpoints do not nest");
  }
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.right < b.right; });
  if (d.arcs_ != arcs)
    throw std::invalid_argument("from_arcs: arcs cross");
  return d;
}

std::string ArcDiagram::to_parentheses() const {
  std::string s(static_cast<size_t>(point_count()), ' ');
  for (const Arc& a : arcs_) {
    s[a.left] = '(';
    s[a.right] = ')';
  }
  return s;
}

std::string ArcDiagram::to_json() const {
  std::ostringstream out;
  out << "{\"n\":" << arc_count() << ",\"arcs\":[";
  for (size_t i = 0; i < arcs_.size(); ++i) {
    if (i) out << ',';
    out << '[' << arcs_[i].left << ',' << arcs_[i].right << ']';
  }
  out << "]}";
  return out.str();
}

const Arc& ArcDiagram::arc(int i) const {
  if (i < 1 || i > arc_count())
    throw std::out_of_range("ArcDiagram::arc: index " + std::to_string(i) +
                            " not in 1.." + std::to_string(arc_count()));
  return arcs_[i - 1];
}

bool ArcDiagram::inside(int i, int j) const {
  const Arc& a = arc(i);
  const Arc& b = arc(j);
  return b.left < a.left && a.right < b.right;
}

BlockStructure block_structure(const ArcDiagram& d) {
  BlockStructure out;
  // index arcs by right endpoint, then take the arcs whose left endpoint
  // sits at nesting depth zero: those are the top arcs, left to right
  std::vector<int> by_right(d.point_count(), 0);
  for (int i = 1; i <= d.arc_count(); ++i) by_right[d.arc(i).right] = i;
  std::string s = d.to_parentheses();
  int depth = 0;
  int start = 0;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[i] == '(') {
      if (depth == 0) start = i;
      ++depth;
    } else {
      --depth;
      if (depth == 0) {
        out.top_arcs.push_back(by_right[i]);
        out.spans.emplace_back(start, i);
      }
    }
  }
  return out;
}

namespace {

void gen_parens(std::string& s, int open, int close, int n,
                const std::function<void(const ArcDiagram&)>& visit) {
  if (static_cast<int>(s.size()) == 2 * n) {
    visit(ArcDiagram::from_parentheses(s));
    return;
  }
  if (open < n) {  // '(' < ')': try the open first for lexicographic order
    s.push_back('(');
    gen_parens(s, open + 1, close, n, visit);
    s.pop_back();
  }
  if (close < open) {
    s.push_back(')');
    gen_parens(s, open, close + 1, n, visit);
    s.pop_back();
  }
}

}  // namespace

void for_each_arc_diagram(int n,
                          const std::function<void(const ArcDiagram&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_arc_diagram: n >= 0");
  std::string s;
  s.reserve(2 * static_cast<size_t>(n));
  gen_parens(s, 0, 0, n, visit);
}

std::vector<ArcDiagram> enumerate_arc_diagrams(int n) {
  std::vector<ArcDiagram> out;
  for_each_arc_diagram(n, [&](const ArcDiagram& d) { out.push_back(d); });
  return out;
}

std::vector<ExactInt> count_by_blocks(int n) {
  if (n < 1) throw std::invalid_argument("count_by_blocks: n >= 1");
  std::vector<ExactInt> counts(n, 0);
  for_each_arc_diagram(n, [&](const ArcDiagram& d) {
    counts[block_structure(d).count() - 1] += 1;
  });
  return counts;
}

}  // namespace tiedarcs
