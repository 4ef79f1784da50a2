#pragma once
// Exact integer arithmetic for the counting work: binomials, Catalan numbers,
// two-parameter Fuss-Catalan numbers A_n(p,q), and the two Riordan-style
// identities (index shift, convolution) used to cross-check recurrences.
//
// Nothing here may round: every division is checked to have zero remainder
// and throws std::logic_error otherwise.

#include <boost/multiprecision/cpp_int.hpp>

namespace tiedarcs {

using ExactInt = boost::multiprecision::cpp_int;

// num/den, demanding an exact quotient; std::logic_error on nonzero remainder.
ExactInt exact_div(const ExactInt& num, const ExactInt& den);

// C(n,k). Zero when k < 0 or k > n; n must be nonnegative.
ExactInt binomial(long long n, long long k);

// C_n = C(2n,n)/(n+1).
ExactInt catalan(long long n);

// A_n(p,q) = q/(pn+q) * C(pn+q, n), with the conventions A_n(p,0) = 0 and
// A_0(p,q) = 1 for q >= 1.
ExactInt fuss_catalan(long long n, long long p, long long q);

struct IdentityPair {
  ExactInt lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

// A_n(p,q)  vs  A_n(p,q-1) + A_{n-1}(p, p+q-1).            Needs n,q >= 1.
IdentityPair check_shift_identity(long long p, long long q, long long n);

// A_n(p,r+s)  vs  sum_{i=0..n} A_i(p,r) * A_{n-i}(p,s).    Needs r,s >= 1.
IdentityPair check_convolution_identity(long long p, long long r, long long s,
                                        long long n);

}  // namespace tiedarcs
