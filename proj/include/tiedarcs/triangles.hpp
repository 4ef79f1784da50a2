#pragma once
// The two counting triangles and their row identities.
//
//   CatalanT:  T(0,0) = 1;  T(n,0) = 1 and T(n,n) = 0 for n > 0;
//              T(n,k) = T(n,k-1) + T(n-1,k)                 for 0 < k < n.
//   FussF:     F(0,0) = 1;  F(n,n) = 0 for n > 0;
//              F(n,k) = sum_{j=0..k} C(k-j+2,2) * F(n-1,j)  for 0 <= k < n.
//
// A Triangle is built row by row once and then read; the identity checks
// below read entries from the cached table rather than recomputing them.

#include <string>
#include <vector>

#include "tiedarcs/exact_math.hpp"

namespace tiedarcs {

enum class TriangleKind { CatalanT, FussF };

class Triangle {
 public:
  Triangle(TriangleKind kind, int n_max);

  TriangleKind kind() const { return kind_; }
  int max_row() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<ExactInt>& row(int n) const;  // bounds-checked
  const ExactInt& entry(int n, int k) const;      // bounds-checked

  std::string to_csv() const;   // one row per line, comma-separated, LF
  std::string to_json() const;  // array of arrays of decimal strings

 private:
  TriangleKind kind_;
  std::vector<std::vector<ExactInt>> rows_;
};

Triangle catalan_triangle(int n_max);
Triangle fuss_triangle(int n_max);

// Last nonzero entry T(n,n-1) vs C_{n-1}, and row sum vs C_n.  Needs n >= 1.
struct CatalanRowChecks {
  ExactInt edge, edge_expected, rowsum, rowsum_expected;
  bool holds() const {
    return edge == edge_expected && rowsum == rowsum_expected;
  }
};
CatalanRowChecks catalan_row_identities(const Triangle& t, int n);

// sum_{k=0..n-1} T(n,k) * 2^(n-1-k)  vs  C(2n-1,n).  Needs n >= 1.
// (The k = n summand is dropped: T(n,n) = 0 and 2^(-1) never materializes.)
IdentityPair weighted_row_sum(const Triangle& t, int n);

// Row sum vs A_n(4,1); C(n-k+3,3)-weighted sum vs A_n(4,4); last nonzero
// entry F(n,n-1) vs A_{n-1}(4,3).  Needs n >= 1.
struct FussRowChecks {
  ExactInt sum, sum_expected, wsum, wsum_expected, edge, edge_expected;
  bool holds() const {
    return sum == sum_expected && wsum == wsum_expected &&
           edge == edge_expected;
  }
};
FussRowChecks fuss_row_identities(const Triangle& f, int n);

}  // namespace tiedarcs
