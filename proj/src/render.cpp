#include "tiedarcs/render.hpp"

#include <algorithm>
#include <vector>

namespace tiedarcs {

namespace {

constexpr int kColWidth = 3;  // columns per point; fits 2-digit labels

// Nesting height: innermost arcs are 1, an enclosing arc is one more than
// the tallest arc under it.  Arcs of equal height never overlap.
std::vector<int> arc_heights(const ArcDiagram& d) {
  const int n = d.arc_count();
  std::vector<int> h(n + 1, 0);
  for (int i = 1; i <= n; ++i) {  // by right endpoint: inner arcs come first
    int best = 0;
    for (int j = 1; j < i; ++j)
      if (d.inside(j, i)) best = std::max(best, h[j]);
    h[i] = best + 1;
  }
  return h;
}

void put(std::string& row, size_t col, char c) {
  if (row.size() < col + 1) row.resize(col + 1, ' ');
  row[col] = c;
}

void put_text(std::string& row, size_t col, const std::string& s) {
  for (size_t i = 0; i < s.size(); ++i) put(row, col + i, s[i]);
}

std::string render_base_and_ties(const ArcDiagram& d,
                                 const std::vector<std::pair<int, int>>& ties) {
  const int n = d.arc_count();
  if (n == 0) return "(empty)\n";
  std::vector<int> h = arc_heights(d);
  const int height = *std::max_element(h.begin() + 1, h.end());
  std::vector<std::string> rows(height);
  for (int i = 1; i <= n; ++i) {
    const Arc& a = d.arc(i);
    const size_t cl = kColWidth * a.left, cr = kColWidth * a.right;
    std::string& row = rows[height - h[i]];
    put(row, cl, '.');
    for (size_t c = cl + 1; c < cr; ++c) put(row, c, '-');
    put(row, cr, '.');
    const std::string label = std::to_string(i);
    if (cr - cl - 1 >= label.size())
      put_text(row, (cl + cr) / 2 - (label.size() - 1) / 2, label);
    for (int r = height - h[i] + 1; r < height; ++r) {
      put(rows[r], cl, '|');
      put(rows[r], cr, '|');
    }
  }
  std::string baseline;
  for (int p = 0; p < d.point_count(); ++p)
    put_text(baseline, kColWidth * p, std::to_string(p));
  rows.push_back(std::move(baseline));
  for (auto [a, b] : ties) {
    std::string row;
    const size_t ca = kColWidth * d.arc(a).right, cb = kColWidth * d.arc(b).right;
    put(row, ca, '*');
    for (size_t c = ca + 1; c < cb; ++c) put(row, c, '=');
    put(row, cb, '*');
    row += "  " + std::to_string(a) + "-" + std::to_string(b);
    rows.push_back(std::move(row));
  }
  std::string out;
  for (std::string& row : rows) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_ascii(const ArcDiagram& d) {
  return render_base_and_ties(d, {});
}

std::string render_ascii(const TbDiagram& d) {
  BlockStructure bs = block_structure(d.base);
  std::vector<std::pair<int, int>> ties;
  for (size_t g = 0; g < d.ties.size(); ++g)
    if (d.ties[g]) ties.emplace_back(bs.top_arcs[g], bs.top_arcs[g + 1]);
  return render_base_and_ties(d.base, ties);
}

std::string render_ascii(const TaDiagram& d) {
  return render_base_and_ties(d.base(), d.ties());
}

}  // namespace tiedarcs
