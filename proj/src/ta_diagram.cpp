#include "tiedarcs/ta_diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tiedarcs {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {  // false if already joined
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::string pair_text(const std::pair<int, int>& t) {
  return std::to_string(t.first) + "-" + std::to_string(t.second);
}

}  // namespace

TaDiagram::TaDiagram(ArcDiagram base, std::vector<std::pair<int, int>> ties)
    : base_(std::move(base)) {
  const int n = base_.arc_count();
  ties_.reserve(ties.size());
  for (auto [a, b] : ties) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n || a == b)
      throw std::invalid_argument("tie " + pair_text({a, b}) +
                                  ": arcs must be distinct indices in 1.." +
                                  std::to_string(n));
    for (int c = 1; c <= n; ++c) {
      if (c == a || c == b) continue;
      if (base_.inside(a, c) != base_.inside(b, c))
        throw std::invalid_argument("tie " + pair_text({a, b}) +
                                    " cannot be drawn: arc " +
                                    std::to_string(c) + " separates the two");
    }
    ties_.emplace_back(a, b);
  }
  std::sort(ties_.begin(), ties_.end());
}

std::string TaDiagram::to_text() const {
  std::string out = base_.to_parentheses();
  out += '|';
  for (size_t i = 0; i < ties_.size(); ++i) {
    if (i) out += ',';
    out += pair_text(ties_[i]);
  }
  return out;
}

TaDiagram TaDiagram::from_text(std::string_view s) {
  size_t bar = s.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("expected '|' between base and ties", s.size());
  ArcDiagram base = ArcDiagram::from_parentheses(s.substr(0, bar));
  std::vector<std::pair<int, int>> ties;
  size_t i = bar + 1;
  if (i < s.size()) {
    while (true) {
      auto read_int = [&]() -> int {
        size_t j = i;
        long long v = 0;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') {
          v = v * 10 + (s[j] - '0');
          if (v > 1000000) throw ParseError("tie index too large", i);
          ++j;
        }
        if (j == i) throw ParseError("expected a tie index", i);
        i = j;
        return static_cast<int>(v);
      };
      int a = read_int();
      if (i >= s.size() || s[i] != '-') throw ParseError("expected '-'", i);
      ++i;
      int b = read_int();
      ties.emplace_back(a, b);
      if (i == s.size()) break;
      if (s[i] != ',') throw ParseError("expected ','", i);
      ++i;
      if (i == s.size()) throw ParseError("trailing ','", i - 1);
    }
  }
  return TaDiagram(std::move(base), std::move(ties));
}

std::string TaDiagram::to_json() const {
  std::ostringstream out;
  out << "{\"n\":" << base_.arc_count() << ",\"arcs\":[";
  for (size_t i = 0; i < base_.arcs().size(); ++i) {
    if (i) out << ',';
    out << '[' << base_.arcs()[i].left << ',' << base_.arcs()[i].right << ']';
  }
  out << "],\"ties\":[";
  for (size_t i = 0; i < ties_.size(); ++i) {
    if (i) out << ',';
    out << '[' << ties_[i].first << ',' << ties_[i].second << ']';
  }
  out << "],\"partition\":[";
  TiePartition parts = tie_partition(*this);
  for (size_t p = 0; p < parts.size(); ++p) {
    if (p) out << ',';
    out << '[';
    for (size_t m = 0; m < parts[p].size(); ++m) {
      if (m) out << ',';
      out << parts[p][m];
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

TiePartition tie_partition(const TaDiagram& d) {
  const int n = d.base().arc_count();
  UnionFind uf(n + 1);
  for (auto [a, b] : d.ties()) uf.unite(a, b);
  std::map<int, std::vector<int>> groups;
  for (int i = 1; i <= n; ++i) groups[uf.find(i)].push_back(i);
  TiePartition parts;
  parts.reserve(groups.size());
  for (auto& [root, members] : groups) parts.push_back(std::move(members));
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return parts;
}

bool is_equivalent(const TaDiagram& a, const TaDiagram& b) {
  return a.base() == b.base() && tie_partition(a) == tie_partition(b);
}

bool is_irreducible(const TaDiagram& d) {
  UnionFind uf(d.base().arc_count() + 1);
  for (auto [a, b] : d.ties())
    if (!uf.unite(a, b)) return false;  // duplicate or cycle
  return true;
}

TaDiagram reduce(const TaDiagram& d) {
  UnionFind uf(d.base().arc_count() + 1);
  std::vector<std::pair<int, int>> keep;
  for (auto [a, b] : d.ties())  // sorted order: deterministic spanning forest
    if (uf.unite(a, b)) keep.emplace_back(a, b);
  return TaDiagram(d.base(), std::move(keep));
}

bool is_standard(const TaDiagram& d) {
  if (!is_irreducible(d)) return false;
  const int n = d.base().arc_count();
  std::vector<int> up(n + 1, 0), down_in(n + 1, 0), down_out(n + 1, 0);
  for (auto [a, b] : d.ties()) {
    ++up[a];
    ++(d.base().inside(a, b) ? down_in : down_out)[b];
  }
  for (int i = 1; i <= n; ++i)
    if (up[i] > 1 || down_in[i] > 1 || down_out[i] > 1) return false;
  return true;
}

TaDiagram standardize(const TaDiagram& d0) {
  TaDiagram d = reduce(d0);
  const ArcDiagram& base = d.base();
  const int n = base.arc_count();
  long long budget = static_cast<long long>(n) * n;
  for (;;) {
    // per-arc tie targets, split by direction
    std::vector<std::vector<int>> up(n + 1), down_in(n + 1), down_out(n + 1);
    for (auto [a, b] : d.ties()) {
      up[a].push_back(b);
      (base.inside(a, b) ? down_in : down_out)[b].push_back(a);
    }
    int h = 0, kind = 0;
    for (int i = 1; i <= n && !h; ++i) {
      if (down_in[i].size() > 1) {
        h = i;
        kind = 1;
      } else if (up[i].size() > 1) {
        h = i;
        kind = 2;
      } else if (down_out[i].size() > 1) {
        h = i;
        kind = 3;
      }
    }
    if (!h) return d;
    if (budget-- <= 0)
      throw std::runtime_error("standardize: rewrite budget exceeded");
    std::vector<int> targets =
        kind == 1 ? down_in[h] : (kind == 2 ? up[h] : down_out[h]);
    std::sort(targets.begin(), targets.end());
    std::vector<std::pair<int, int>> ties = d.ties();
    auto drop = [&ties](int x, int y) {
      if (x > y) std::swap(x, y);
      ties.erase(std::find(ties.begin(), ties.end(), std::make_pair(x, y)));
    };
    auto add = [&ties](int x, int y) {
      if (x > y) std::swap(x, y);
      ties.emplace_back(x, y);
    };
    const size_t m = targets.size();
    if (kind == 1) {
      // several ties from inside: keep only the one from the highest arc
      for (size_t t = 0; t + 1 < m; ++t) drop(targets[t], h);
    } else {
      // several ties upward / from outside below: keep only the lowest
      for (size_t t = 1; t < m; ++t) drop(h, targets[t]);
    }
    // chain the targets so the part stays connected
    for (size_t t = 0; t + 1 < m; ++t) add(targets[t], targets[t + 1]);
    d = reduce(TaDiagram(base, std::move(ties)));
  }
}

TaBlocks ta_blocks(const TaDiagram& d) {
  if (!is_standard(d))
    throw std::invalid_argument("ta_blocks: input must be standard");
  BlockStructure bs = block_structure(d.base());
  TaBlocks out;
  out.top_arcs = bs.top_arcs;
  const int b = bs.count();
  if (b == 0) return out;
  std::vector<int> pos(d.base().arc_count() + 1, -1);
  for (int p = 0; p < b; ++p) pos[bs.top_arcs[p]] = p;
  // one interval per part that owns more than one top arc
  std::vector<std::pair<int, int>> intervals;
  for (const auto& part : tie_partition(d)) {
    int lo = b, hi = -1;
    for (int a : part)
      if (pos[a] >= 0) {
        lo = std::min(lo, pos[a]);
        hi = std::max(hi, pos[a]);
      }
    if (hi > lo) intervals.emplace_back(lo, hi);
  }
  std::sort(intervals.begin(), intervals.end());
  // merge overlapping intervals (sharing a position joins transitively)
  std::vector<std::pair<int, int>> merged;
  for (auto [lo, hi] : intervals) {
    if (!merged.empty() && lo <= merged.back().second)
      merged.back().second = std::max(merged.back().second, hi);
    else
      merged.emplace_back(lo, hi);
  }
  size_t idx = 0;
  for (int p = 0; p < b; ++p) {
    if (idx < merged.size() && merged[idx].first == p) {
      out.groups.push_back(merged[idx]);
      p = merged[idx].second;
      ++idx;
    } else {
      out.groups.emplace_back(p, p);
    }
  }
  for (auto [gs, ge] : out.groups)
    out.spans.emplace_back(bs.spans[gs].first, bs.spans[ge].second);
  return out;
}

std::vector<TaDiagram> extend_all(const TaDiagram& d) {
  TaBlocks tb = ta_blocks(d);  // also rejects non-standard input
  const int n = d.base().arc_count();
  const int k = tb.count();
  const std::string s = d.base().to_parentheses();
  std::vector<TaDiagram> out;
  for (int i = 0; i <= k; ++i) {
    // gap i: blocks 1..i stay left of the new arc, blocks i+1..k under it
    const int pos = i == 0 ? 0 : tb.spans[i - 1].second + 1;
    std::string ns;
    ns.reserve(s.size() + 2);
    ns.append(s, 0, pos);
    ns += '(';
    ns.append(s, pos, std::string::npos);
    ns += ')';
    ArcDiagram nb = ArcDiagram::from_parentheses(ns);
    for (int e = 0; e <= i; ++e) {      // 0 = no tie to the left
      for (int t = i; t <= k; ++t) {    // i = no tie underneath
        std::vector<std::pair<int, int>> ties = d.ties();
        if (e >= 1) ties.emplace_back(tb.last_top_arc(e - 1), n + 1);
        if (t >= i + 1) ties.emplace_back(tb.last_top_arc(t - 1), n + 1);
        out.emplace_back(nb, std::move(ties));
      }
    }
  }
  return out;
}

TaCensus for_each_standard_ta(
    int n, const std::function<void(const TaDiagram&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_standard_ta: n >= 0");
  TaCensus census;
  census.n = n;
  census.by_blocks.assign(n, ExactInt(0));
  std::function<void(const TaDiagram&, int)> rec = [&](const TaDiagram& d,
                                                       int depth) {
    if (depth == n) {
      visit(d);
      census.total += 1;
      if (n > 0) census.by_blocks[ta_blocks(d).count() - 1] += 1;
      return;
    }
    for (const TaDiagram& child : extend_all(d)) rec(child, depth + 1);
  };
  rec(TaDiagram(), 0);
  return census;
}

TaCensus standard_ta_census(int n) {
  return for_each_standard_ta(n, [](const TaDiagram&) {});
}

std::vector<IdentityPair> block_recurrence_check(int n) {
  if (n < 1) throw std::invalid_argument("block_recurrence_check: n >= 1");
  TaCensus cur = standard_ta_census(n);
  TaCensus prev = standard_ta_census(n - 1);
  auto b_prev = [&](int k) -> ExactInt {
    if (n - 1 == 0) return k == 0 ? 1 : 0;
    if (k < 1 || k > n - 1) return 0;
    return prev.by_blocks[k - 1];
  };
  std::vector<IdentityPair> out;
  for (int j = 1; j <= n; ++j) {
    IdentityPair p;
    p.lhs = cur.by_blocks[j - 1];
    p.rhs = 0;
    for (int k = j - 1; k <= n - 1; ++k)
      p.rhs += b_prev(k) * binomial(k - j + 3, 2);
    out.push_back(std::move(p));
  }
  return out;
}

TaDiagram concat(const TaDiagram& a, const TaDiagram& b) {
  const int na = a.base().arc_count();
  const int shift = a.base().point_count();
  std::vector<Arc> arcs = a.base().arcs();
  for (const Arc& x : b.base().arcs())
    arcs.push_back({x.left + shift, x.right + shift});
  std::vector<std::pair<int, int>> ties = a.ties();
  for (auto [p, q] : b.ties()) ties.emplace_back(p + na, q + na);
  return TaDiagram(ArcDiagram::from_arcs(na + b.base().arc_count(),
                                         std::move(arcs)),
                   std::move(ties));
}

namespace {

// The sub-diagram on points [plo, phi]; arcs (other than skip_arc) must lie
// entirely inside or outside the range, and no kept tie may cross it.
TaDiagram extract_range(const TaDiagram& d, int plo, int phi, int skip_arc) {
  const int n = d.base().arc_count();
  std::vector<Arc> arcs;
  std::vector<int> newindex(n + 1, 0);
  int cnt = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == skip_arc) continue;
    const Arc& a = d.base().arc(i);
    const bool in = a.left >= plo && a.right <= phi;
    const bool out = a.right < plo || a.left > phi;
    if (in == out)
      throw std::invalid_argument("extract_range: arc straddles the boundary");
    if (in) {
      arcs.push_back({a.left - plo, a.right - plo});
      newindex[i] = ++cnt;
    }
  }
  std::vector<std::pair<int, int>> ties;
  for (auto [p, q] : d.ties()) {
    if (p == skip_arc || q == skip_arc) continue;
    const bool pin = newindex[p] > 0, qin = newindex[q] > 0;
    if (pin != qin)
      throw std::invalid_argument("extract_range: tie " + pair_text({p, q}) +
                                  " crosses the boundary");
    if (pin) ties.emplace_back(newindex[p], newindex[q]);
  }
  return TaDiagram(ArcDiagram::from_arcs(cnt, std::move(arcs)),
                   std::move(ties));
}

}  // namespace

std::pair<TaDiagram, TaDiagram> split_last_block(const TaDiagram& d) {
  TaBlocks tb = ta_blocks(d);
  if (tb.count() == 0)
    throw std::invalid_argument("split_last_block: empty diagram");
  const int cut = tb.spans.back().first;
  return {extract_range(d, 0, cut - 1, 0),
          extract_range(d, cut, d.base().point_count() - 1, 0)};
}

TaDiagram remove_last_arc(const TaDiagram& d) {
  const int n = d.base().arc_count();
  if (n < 1) throw std::invalid_argument("remove_last_arc: no arcs");
  const Arc last = d.base().arc(n);  // its right endpoint is the last point
  std::vector<Arc> arcs;
  for (int i = 1; i < n; ++i) {
    const Arc& a = d.base().arc(i);
    arcs.push_back({a.left - (a.left > last.left ? 1 : 0),
                    a.right - (a.right > last.left ? 1 : 0)});
  }
  std::vector<std::pair<int, int>> ties;
  for (auto [p, q] : d.ties())
    if (q != n) ties.emplace_back(p, q);
  return TaDiagram(ArcDiagram::from_arcs(n - 1, std::move(arcs)),
                   std::move(ties));
}

std::array<TaDiagram, 3> one_block_to_triple(const TaDiagram& d) {
  TaBlocks tb = ta_blocks(d);
  if (tb.count() != 1)
    throw std::invalid_argument(
        "one_block_to_triple: diagram must have exactly one block");
  const int n = d.base().arc_count();
  const Arc an = d.base().arc(n);
  int i = 0;
  while (i + 1 <= n - 1 && d.base().arc(i + 1).right < an.left) ++i;
  // the last arc's ties: at most one to the left part, one to an arc under it
  int ext = 0, inner = 0;
  for (auto [p, q] : d.ties()) {
    if (q != n) continue;
    int& slot = p <= i ? ext : inner;
    if (slot)
      throw std::logic_error("one_block_to_triple: standard form violated");
    slot = p;
  }
  if ((i > 0) != (ext != 0))
    throw std::invalid_argument(
        "one_block_to_triple: single block needs a tie to the left part "
        "exactly when that part is nonempty");
  const int d2_hi = inner ? d.base().arc(inner).right : an.left;
  TaDiagram d1 = extract_range(d, 0, an.left - 1, n);
  TaDiagram d2 = extract_range(d, an.left + 1, d2_hi, n);
  TaDiagram d3 = extract_range(d, d2_hi + 1, 2 * n - 2, n);
  if (ext != 0 && ext != ta_blocks(d1).last_top_arc(0))
    throw std::invalid_argument(
        "one_block_to_triple: the left tie must target the first block");
  return {std::move(d1), std::move(d2), std::move(d3)};
}

TaDiagram triple_to_one_block(const TaDiagram& d1, const TaDiagram& d2,
                              const TaDiagram& d3) {
  const int i = d1.base().arc_count();
  const int j = d2.base().arc_count();
  const int n = i + j + d3.base().arc_count() + 1;
  if (!is_standard(d3))
    throw std::invalid_argument("triple_to_one_block: inputs must be standard");
  TaBlocks b1 = ta_blocks(d1);  // validates d1
  TaBlocks b2 = ta_blocks(d2);  // validates d2
  std::string base = d1.base().to_parentheses();
  base += '(';
  base += d2.base().to_parentheses();
  base += d3.base().to_parentheses();
  base += ')';
  std::vector<std::pair<int, int>> ties = d1.ties();
  for (auto [p, q] : d2.ties()) ties.emplace_back(p + i, q + i);
  for (auto [p, q] : d3.ties()) ties.emplace_back(p + i + j, q + i + j);
  if (i > 0) ties.emplace_back(b1.last_top_arc(0), n);
  if (j > 0) ties.emplace_back(b2.last_top_arc(b2.count() - 1) + i, n);
  return TaDiagram(ArcDiagram::from_parentheses(base), std::move(ties));
}

}  // namespace tiedarcs
