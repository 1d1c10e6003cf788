#include "bnmod/combinatorics.hpp"

#include <stdexcept>

namespace bnmod {

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational binom_general(const Int& n, long j) {
    if (j < 0)
        throw std::invalid_argument("binom_general: negative lower index");
    Int num = 1;
    for (long i = 0; i < j; ++i) num *= (n - i);
    Rational r(num, factorial(j));
    if (denominator(r) != 1)
        throw std::logic_error("binom_general produced a non-integer");
    return r;
}

Int binom_int(const Int& n, long j) {
    return rational_as_int(binom_general(n, j));
}

Int lambda_fn(long g, long n) {
    if (g < 0 || n < 0)
        throw std::invalid_argument("lambda_fn: negative argument");
    Int sum = 0;
    for (long k = n; k >= 0; k -= 2) sum += binom_int(2 * g, k);
    return sum;
}

namespace series {

std::vector<Rational> mul(const std::vector<Rational>& a,
                          const std::vector<Rational>& b, int max_order) {
    std::vector<Rational> c(max_order + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= std::size_t(max_order); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= std::size_t(max_order);
             ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

std::vector<Rational> inverse(const std::vector<Rational>& a, int max_order) {
    if (a.empty() || a[0] == 0)
        throw std::invalid_argument("series inverse: zero constant term");
    std::vector<Rational> inv(max_order + 1, Rational(0));
    inv[0] = Rational(1) / a[0];
    for (int k = 1; k <= max_order; ++k) {
        Rational s = 0;
        for (int i = 1; i <= k && std::size_t(i) < a.size(); ++i)
            s += a[i] * inv[k - i];
        inv[k] = -s / a[0];
    }
    return inv;
}

std::vector<Rational> log(const std::vector<Rational>& a, int max_order) {
    if (a.empty() || a[0] != 1)
        throw std::invalid_argument("series log: constant term must be 1");
    // log(a) = sum_{m>=1} (-1)^{m+1} u^m / m with u = a - 1.
    std::vector<Rational> u(a.begin(), a.end());
    u[0] = 0;
    std::vector<Rational> result(max_order + 1, Rational(0));
    std::vector<Rational> power{Rational(1)};
    for (int m = 1; m <= max_order; ++m) {
        power = mul(power, u, max_order);
        Rational sign = (m % 2 == 1) ? 1 : -1;
        for (int k = 0; k <= max_order; ++k)
            result[k] += sign * power[k] / m;
    }
    return result;
}

}  // namespace series

std::vector<Rational> todd_series_coefficients(int max_order) {
    if (max_order < 0)
        throw std::invalid_argument("todd_series_coefficients: negative order");
    // (1 - e^{-x})/x = sum_k (-1)^k x^k / (k+1)!; the Todd series is its
    // reciprocal.
    std::vector<Rational> denom(max_order + 1);
    for (int k = 0; k <= max_order; ++k) {
        denom[k] = Rational((k % 2 == 0) ? 1 : -1, factorial(k + 1));
    }
    return series::inverse(denom, max_order);
}

std::vector<Rational> log_todd_coefficients(int max_order) {
    return series::log(todd_series_coefficients(max_order), max_order);
}

bool vandermonde_check(const Int& n, const Int& p, long m) {
    if (m < 0) throw std::invalid_argument("vandermonde_check: negative m");
    Rational lhs = 0;
    for (long j = 0; j <= m; ++j)
        lhs += binom_general(n, j) * binom_general(p, m - j);
    return lhs == binom_general(n + p, m);
}

}  // namespace bnmod
