#include "tiedarcs/triangles.hpp"

#include <sstream>
#include <stdexcept>

namespace tiedarcs {

Triangle::Triangle(TriangleKind kind, int n_max) : kind_(kind) {
  if (n_max < 0)
    throw std::invalid_argument("Triangle: n_max must be nonnegative");
  rows_.reserve(n_max + 1);
  rows_.push_back({ExactInt(1)});
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<ExactInt>& prev = rows_[n - 1];
    std::vector<ExactInt> row(n + 1);  // row[n] stays 0
    if (kind_ == TriangleKind::CatalanT) {
      row[0] = 1;
      for (int k = 1; k < n; ++k) row[k] = row[k - 1] + prev[k];
    } else {
      for (int k = 0; k < n; ++k) {
        ExactInt s = 0;
        for (int j = 0; j <= k; ++j) s += binomial(k - j + 2, 2) * prev[j];
        row[k] = s;
      }
    }
    rows_.push_back(std::move(row));
  }
}

const std::vector<ExactInt>& Triangle::row(int n) const {
  if (n < 0 || n > max_row())
    throw std::out_of_range("Triangle::row: row " + std::to_string(n) +
                            " not in 0.." + std::to_string(max_row()));
  return rows_[n];
}

const ExactInt& Triangle::entry(int n, int k) const {
  const std::vector<ExactInt>& r = row(n);
  if (k < 0 || k >= static_cast<int>(r.size()))
    throw std::out_of_range("Triangle::entry: k " + std::to_string(k) +
                            " not in 0.." + std::to_string(n));
  return r[k];
}

std::string Triangle::to_csv() const {
  std::ostringstream out;
  for (const auto& row : rows_) {
    for (size_t k = 0; k < row.size(); ++k) {
      if (k) out << ',';
      out << row[k];
    }
    out << '\n';
  }
  return out.str();
}

std::string Triangle::to_json() const {
  std::ostringstream out;
  out << '[';
  for (size_t n = 0; n < rows_.size(); ++n) {
    if (n) out << ',';
    out << '[';
    for (size_t k = 0; k < rows_[n].size(); ++k) {
      if (k) out << ',';
      out << '"' << rows_[n][k] << '"';
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

Triangle catalan_triangle(int n_max) {
  return Triangle(TriangleKind::CatalanT, n_max);
}

Triangle fuss_triangle(int n_max) { return Triangle(TriangleKind::FussF, n_max); }

namespace {

void require_kind(const Triangle& t, TriangleKind want, const char* who) {
  if (t.kind() != want)
    throw std::invalid_argument(std::string(who) +
                                ": triangle of the wrong kind");
}

}  // namespace

CatalanRowChecks catalan_row_identities(const Triangle& t, int n) {
  require_kind(t, TriangleKind::CatalanT, "catalan_row_identities");
  if (n < 1) throw std::invalid_argument("catalan_row_identities: n >= 1");
  CatalanRowChecks out;
  out.edge = t.entry(n, n - 1);
  out.edge_expected = catalan(n - 1);
  out.rowsum = 0;
  for (const ExactInt& v : t.row(n)) out.rowsum += v;
  out.rowsum_expected = catalan(n);
  return out;
}

IdentityPair weighted_row_sum(const Triangle& t, int n) {
  require_kind(t, TriangleKind::CatalanT, "weighted_row_sum");
  if (n < 1) throw std::invalid_argument("weighted_row_sum: n >= 1");
  IdentityPair out;
  out.lhs = 0;
  for (int k = 0; k < n; ++k)
    out.lhs += t.entry(n, k) * (ExactInt(1) << (n - 1 - k));
  out.rhs = binomial(2 * n - 1, n);
  return out;
}

FussRowChecks fuss_row_identities(const Triangle& f, int n) {
  require_kind(f, TriangleKind::FussF, "fuss_row_identities");
  if (n < 1) throw std::invalid_argument("fuss_row_identities: n >= 1");
  FussRowChecks out;
  out.sum = 0;
  out.wsum = 0;
  for (int k = 0; k <= n; ++k) {
    out.sum += f.entry(n, k);
    out.wsum += f.entry(n, k) * binomial(n - k + 3, 3);
  }
  out.sum_expected = fuss_catalan(n, 4, 1);
  out.wsum_expected = fuss_catalan(n, 4, 4);
  out.edge = f.entry(n, n - 1);
  out.edge_expected = fuss_catalan(n - 1, 4, 3);
  return out;
}

}  // namespace tiedarcs
