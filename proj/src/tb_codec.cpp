#include "tiedarcs/tb_codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiedarcs {

std::string TbDiagram::to_text() const {
  std::string out = base.to_parentheses();
  out += '|';
  for (auto t : ties) out += t ? '1' : '0';
  return out;
}

TbDiagram TbDiagram::from_text(std::string_view s) {
  size_t bar = s.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("expected '|' between base and tie bits", s.size());
  TbDiagram d;
  d.base = ArcDiagram::from_parentheses(s.substr(0, bar));
  int blocks = block_structure(d.base).count();
  size_t want = blocks > 0 ? static_cast<size_t>(blocks - 1) : 0;
  std::string_view bits = s.substr(bar + 1);
  if (bits.size() != want)
    throw ParseError("expected " + std::to_string(want) + " tie bits, got " +
                         std::to_string(bits.size()),
                     bar + 1);
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw ParseError("tie bits must be 0 or 1", bar + 1 + i);
    d.ties.push_back(bits[i] == '1' ? 1 : 0);
  }
  return d;
}

SignSequence SignSequence::from_combination(const std::vector<int>& c, int n) {
  if (n < 0 || c.size() != static_cast<size_t>(n))
    throw std::invalid_argument(
        "combination must have exactly n elements for n arcs");
  SignSequence s;
  s.values.assign(2 * static_cast<size_t>(n), -1);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1 || c[i] > 2 * n - 1)
      throw std::invalid_argument("combination element " +
                                  std::to_string(c[i]) +
                                  " outside 1..2n-1");
    if (i > 0 && c[i] <= c[i - 1])
      throw std::invalid_argument("combination must be strictly ascending");
    s.values[c[i]] = 1;
  }
  s.prefix.resize(2 * static_cast<size_t>(n));
  int acc = 0;
  for (int i = 0; i < 2 * n; ++i) {
    acc += s.values[i];
    s.prefix[i] = acc;
  }
  return s;
}

void for_each_tb_diagram(int n,
                         const std::function<void(const TbDiagram&)>& visit) {
  if (n < 1) throw std::invalid_argument("for_each_tb_diagram: n >= 1");
  for_each_arc_diagram(n, [&](const ArcDiagram& base) {
    int bits = block_structure(base).count() - 1;
    TbDiagram d;
    d.base = base;
    d.ties.assign(bits, 0);
    while (true) {  // tie vectors as a binary counter, ties[0] least significant
      visit(d);
      int i = 0;
      while (i < bits && d.ties[i]) d.ties[i++] = 0;
      if (i == bits) break;
      d.ties[i] = 1;
    }
  });
}

void for_each_combination(
    int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_combination: n >= 0");
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = i + 1;
  if (n == 0) {
    visit(c);
    return;
  }
  for (;;) {
    visit(c);
    int i = n - 1;  // rightmost member that can still move up
    while (i >= 0 && c[i] == n + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < n; ++j) c[j] = c[j - 1] + 1;
  }
}

std::vector<int> encode_combination(const TbDiagram& d) {
  BlockStructure b = block_structure(d.base);
  size_t want = b.count() > 0 ? static_cast<size_t>(b.count() - 1) : 0;
  if (d.ties.size() != want)
    throw std::invalid_argument("encode_combination: tie vector length " +
                                std::to_string(d.ties.size()) +
                                ", expected " + std::to_string(want));
  std::vector<int> out;
  out.reserve(d.base.arc_count());
  for (int g = 0; g < b.count(); ++g) {
    // a block tied to its predecessor is reversed: left endpoints go out
    bool reversed = g > 0 && d.ties[g - 1];
    auto [lo, hi] = b.spans[g];
    for (const Arc& a : d.base.arcs())
      if (lo <= a.left && a.right <= hi)
        out.push_back(reversed ? a.left : a.right);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TbDiagram decode_combination(const std::vector<int>& c, int n) {
  SignSequence s = SignSequence::from_combination(c, n);
  std::vector<Arc> arcs;
  std::vector<std::uint8_t> ties;
  int start = 0;
  bool first_block = true;
  for (int p = 0; p < 2 * n; ++p) {
    if (s.prefix[p] != 0) continue;
    // block [start, p]; the sign at its first point fixes the orientation
    bool reversed = s.values[start] > 0;
    if (!first_block) ties.push_back(reversed ? 1 : 0);
    first_block = false;
    int open = reversed ? 1 : -1;
    std::vector<int> stk;
    for (int i = start; i <= p; ++i) {
      if (s.values[i] == open) {
        stk.push_back(i);
      } else {
        if (stk.empty())
          throw std::logic_error("decode_combination: unbalanced block");
        arcs.push_back({stk.back(), i});
        stk.pop_back();
      }
    }
    if (!stk.empty())
      throw std::logic_error("decode_combination: unbalanced block");
    start = p + 1;
  }
  TbDiagram d;
  d.base = ArcDiagram::from_arcs(n, std::move(arcs));
  d.ties = std::move(ties);
#ifndef NDEBUG
  if (encode_combination(d) != c)
    throw std::logic_error("decode_combination: postcondition failed");
#endif
  return d;
}

std::string combination_to_text(const std::vector<int>& c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

std::vector<int> parse_combination(std::string_view s) {
  std::vector<int> out;
  if (s.empty()) return out;
  size_t i = 0;
  while (true) {
    size_t j = i;
    long long v = 0;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9') {
      v = v * 10 + (s[j] - '0');
      if (v > 1000000) throw ParseError("combination element too large", i);
      ++j;
    }
    if (j == i) throw ParseError("expected a number", i);
    out.push_back(static_cast<int>(v));
    if (j == s.size()) break;
    if (s[j] != ',') throw ParseError("expected ','", j);
    i = j + 1;
    if (i == s.size()) throw ParseError("trailing ','", j);
  }
  return out;
}

}  // namespace tiedarcs
