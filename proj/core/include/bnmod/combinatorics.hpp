#pragma once

#include <vector>

#include "bnmod/rational.hpp"

namespace bnmod {

Int factorial(long n);

// Generalized binomial coefficient C(n, j) for arbitrary integer n and
// j >= 0: 1 when j = 0, otherwise n(n-1)...(n-j+1)/j!. The result is
// always an integer; it is returned as a Rational and asserted integral.
// Satisfies C(n, j) = (-1)^j C(j-n-1, j) for j > 0.
Rational binom_general(const Int& n, long j);

// Same value as binom_general, as an Int.
Int binom_int(const Int& n, long j);

// Lambda(g, n) = C(2g, n) + C(2g, n-2) + ... down to C(2g, 0) or C(2g, 1)
// depending on the parity of n. Defined for all n >= 0, including n > 2g,
// by the same parity-matched tail sum.
Int lambda_fn(long g, long n);

// Coefficients t_0..t_max of the series x/(1 - e^{-x}).
std::vector<Rational> todd_series_coefficients(int max_order);

// Coefficients tau_0..tau_max of log(x/(1 - e^{-x})); tau_0 = 0.
std::vector<Rational> log_todd_coefficients(int max_order);

// True iff sum_{j=0}^{m} C(n, j) C(p, m-j) = C(n+p, m).
bool vandermonde_check(const Int& n, const Int& p, long m);

namespace series {
// Truncated one-variable power series utilities over Rational; all vectors
// are coefficient lists c_0..c_k and results are truncated to the shorter
// relevant length.
std::vector<Rational> mul(const std::vector<Rational>& a,
                          const std::vector<Rational>& b, int max_order);
std::vector<Rational> inverse(const std::vector<Rational>& a, int max_order);
std::vector<Rational> log(const std::vector<Rational>& a, int max_order);
}  // namespace series

}  // namespace bnmod
