#include "tiedarcs/exact_math.hpp"

#include <stdexcept>
#include <string>

namespace tiedarcs {

ExactInt exact_div(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::logic_error("exact_div: division by zero");
  ExactInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw std::logic_error("exact_div: " + num.str() + "/" + den.str() +
                           " leaves remainder " + r.str());
  return q;
}

ExactInt binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; after the i-th step the accumulator is C(n,i+1),
  // so every intermediate division is exact.
  ExactInt acc = 1;
  for (long long i = 0; i < k; ++i) {
    acc *= n - i;
    acc = exact_div(acc, ExactInt(i + 1));
  }
  return acc;
}

ExactInt catalan(long long n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be nonnegative");
  return exact_div(binomial(2 * n, n), ExactInt(n + 1));
}

ExactInt fuss_catalan(long long n, long long p, long long q) {
  if (n < 0 || p < 0 || q < 0)
    throw std::invalid_argument("fuss_catalan: arguments must be nonnegative");
  if (q == 0) return 0;  // A_n(p,0) = 0, including n = 0
  return exact_div(q * binomial(p * n + q, n), ExactInt(p * n + q));
}

IdentityPair check_shift_identity(long long p, long long q, long long n) {
  if (n < 1 || q < 1 || p < 1)
    throw std::invalid_argument("check_shift_identity: needs p,q,n >= 1");
  IdentityPair out;
  out.lhs = fuss_catalan(n, p, q);
  out.rhs = fuss_catalan(n, p, q - 1) + fuss_catalan(n - 1, p, p + q - 1);
  return out;
}

IdentityPair check_convolution_identity(long long p, long long r, long long s,
                                        long long n) {
  if (n < 0 || r < 1 || s < 1 || p < 1)
    throw std::invalid_argument(
        "check_convolution_identity: needs p,r,s >= 1 and n >= 0");
  IdentityPair out;
  out.lhs = fuss_catalan(n, p, r + s);
  out.rhs = 0;
  for (long long i = 0; i <= n; ++i)
    out.rhs += fuss_catalan(i, p, r) * fuss_catalan(n - i, p, s);
  return out;
}

}  // namespace tiedarcs
