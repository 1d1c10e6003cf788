#include "bnmod/moduli.hpp"

#include <stdexcept>

#include "bnmod/char_calculus.hpp"
#include "bnmod/combinatorics.hpp"
#include "bnmod/pu_ring.hpp"

namespace bnmod {

namespace {

Int pow_int(long base, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

PUContextPtr context_for(const ModuliParams& p, long K) {
    return make_pu_context(static_cast<int>(p.g), p.N, p.index_rank(), K);
}

// ch of the tangent bundle restricted from PU: the stable class
// [O(1) (x) U] - [O(1)^K] has rank R, so the honest tangent bundle of the
// m-dimensional moduli space differs from it by g-1 trivial summands:
// ch(TN) = (g-1) + e^xi (R - N Theta).
VirtualBundle<PUClass> tangent_bundle(const ModuliParams& p,
                                      const PUContextPtr& ctx) {
    const long R = p.index_rank();
    const PUClass exp_xi = exp_nilpotent(pu_xi(ctx));
    const PUClass stable = exp_xi * (pu_unit(ctx).scaled(Rational(R)) -
                                     pu_theta(ctx).scaled(Rational(p.N)));
    VirtualBundle<PUClass> tn;
    tn.rank = p.dimension();
    tn.chern_character = stable + pu_unit(ctx).scaled(Rational(p.g - 1));
    return tn;
}

}  // namespace

Int BettiTable::euler() const {
    Int chi = 0;
    for (std::size_t r = 0; r < b.size(); ++r)
        chi += (r % 2 == 0) ? b[r] : -b[r];
    return chi;
}

Int HodgeTable::row_sum(long r) const {
    Int s = 0;
    for (long p = 0; p <= m; ++p) {
        const long q = r - p;
        if (q >= 0 && q <= m) s += h[p][q];
    }
    return s;
}

long dimension(const ModuliParams& p) {
    p.validate();
    return p.dimension();
}

Int euler_closed(const ModuliParams& p) {
    p.validate();
    const long m = p.dimension();
    if (m < 0) return 0;
    const Int chi = pow_int(p.N, p.g) * binom_int(2 * p.g - 2, m);
    return (m % 2 == 0) ? chi : -chi;
}

Int euler_integral(const ModuliParams& p, long K) {
    p.validate();
    const long m = p.dimension();
    if (m < 0) return 0;
    const long R = p.index_rank();
    const auto ctx = context_for(p, K);
    Rational chi = 0;
    for (long l = 0; l <= p.g; ++l) {
        if (m - l < 0) continue;  // binomial lower index R+g-1-l < 0
        const Rational outer =
            binom_general(R - l, m - l) *
            Rational((l % 2 == 0) ? pow_int(p.N, l) : -pow_int(p.N, l),
                     factorial(l));
        if (outer == 0) continue;
        chi += outer * integrate_PU(PUClass::monomial(
                           ctx, static_cast<int>(l), K + m - l, 1));
    }
    return rational_as_int(chi);
}

Int euler_characteristic(const ModuliParams& p) {
    const Int closed = euler_closed(p);
    if (p.dimension() < 0) return closed;
    const Int integral = euler_integral(p, p.default_K());
    if (closed != integral)
        throw ConsistencyError("Euler characteristic route disagreement: closed=" +
                               closed.str() + " integral=" + integral.str());
    return closed;
}

BettiTable betti_table(const ModuliParams& p) {
    p.validate();
    const long m = p.dimension();
    BettiTable t;
    if (m < 0) return t;
    t.b.resize(2 * m + 1);
    for (long r = 0; r < m; ++r) {
        t.b[r] = lambda_fn(p.g, r);
        t.b[2 * m - r] = t.b[r];
    }
    // Middle value forced by Poincare duality and the Euler characteristic:
    // b_m = N^g C(2g-2, m) - 2 sum_{j=0}^{m-1} (-1)^{m-j} Lambda(g, j).
    Int middle = pow_int(p.N, p.g) * binom_int(2 * p.g - 2, m);
    for (long j = 0; j < m; ++j) {
        const Int term = 2 * lambda_fn(p.g, j);
        middle += ((m - j) % 2 == 0) ? -term : term;
    }
    if (middle < 0)
        throw ConsistencyError("negative middle Betti number b_" +
                               std::to_string(m) + " = " + middle.str());
    t.b[m] = middle;
    return t;
}

Int middle_betti_printed(const ModuliParams& p) {
    p.validate();
    const long m = p.dimension();
    if (m < 0) throw std::invalid_argument("empty moduli space");
    Int v = pow_int(p.N, p.g) * binom_int(2 * p.g - 2, m);
    for (long j = 0; j <= m; ++j) {
        const Int term = 2 * lambda_fn(p.g, j);
        v += ((m - j) % 2 == 0) ? -term : term;
    }
    return v;
}

std::vector<Int> poincare_polynomial(const ModuliParams& p) {
    return betti_table(p).b;
}

std::vector<Int> macdonald_oracle(long g, long n) {
    if (g < 0 || n < 0)
        throw std::invalid_argument("macdonald_oracle: negative argument");
    // [x^n] (1+xt)^{2g} / ((1-x)(1-xt^2))
    //   = sum_{i+j+k = n} C(2g, i) t^{i + 2k}.
    std::vector<Int> coeffs(2 * n + 1, Int(0));
    for (long i = 0; i <= std::min(n, 2 * g); ++i) {
        const Int c = binom_int(2 * g, i);
        for (long k = 0; i + k <= n; ++k) coeffs[i + 2 * k] += c;
    }
    return coeffs;
}

Int chi_omega_p(const ModuliParams& p, long pw, long K) {
    p.validate();
    if (pw < 0) throw std::invalid_argument("chi_omega_p: negative p");
    const auto ctx = context_for(p, K);
    const auto tn = tangent_bundle(p, ctx);
    const auto omega_p = lambda_power_character(dualize(tn), static_cast<int>(pw));
    const PUClass xi_K = [&] {
        PUClass r = pu_unit(ctx);
        const PUClass xi = pu_xi(ctx);
        for (long i = 0; i < K; ++i) r = r * xi;
        return r;
    }();
    return rational_as_int(
        integrate_PU(xi_K * omega_p.chern_character * todd_class(tn)));
}

Int hodge_off_middle(long g, long m, long p, long q) {
    if (p + q == m)
        throw std::invalid_argument("hodge_off_middle: middle degree");
    if (p + q > m) {
        p = m - p;
        q = m - q;
    }
    Int s = 0;
    for (long r = 0; r <= std::min(p, q); ++r)
        s += binom_int(g, p - r) * binom_int(g, q - r);
    return s;
}

HodgeTable hodge_table(const ModuliParams& p, std::optional<long> K_opt,
                       bool force) {
    p.validate();
    const long m = p.dimension();
    if (m < 0) throw std::invalid_argument("hodge_table: empty moduli space");
    if (!force && (p.g > 3 || m > 8))
        throw std::invalid_argument(
            "hodge_table: desk-scale limits g <= 3, m <= 8 (use force)");
    const long K = K_opt.value_or(p.default_K());

    HodgeTable t;
    t.m = m;
    t.h.assign(m + 1, std::vector<Int>(m + 1, Int(0)));
    for (long pp = 0; pp <= m; ++pp)
        for (long q = 0; q <= m; ++q)
            if (pp + q != m) t.h[pp][q] = hodge_off_middle(p.g, m, pp, q);

    // Middle anti-diagonal from the holomorphic Euler characteristics:
    // chi(Omega^p) = sum_q (-1)^q h^{p,q}.
    for (long pp = 0; pp <= m; ++pp) {
        Int chi = chi_omega_p(p, pp, K);
        Int rest = 0;
        for (long q = 0; q <= m; ++q) {
            if (q == m - pp) continue;
            rest += (q % 2 == 0) ? t.h[pp][q] : -t.h[pp][q];
        }
        Int mid = chi - rest;
        if ((m - pp) % 2 != 0) mid = -mid;
        if (mid < 0)
            throw ConsistencyError("negative middle Hodge number h^{" +
                                   std::to_string(pp) + "," +
                                   std::to_string(m - pp) + "} = " + mid.str());
        t.h[pp][m - pp] = mid;
    }

    for (long pp = 0; pp <= m; ++pp)
        for (long q = 0; q <= m; ++q) {
            if (t.h[pp][q] != t.h[q][pp])
                throw ConsistencyError("Hodge table not symmetric at (" +
                                       std::to_string(pp) + "," +
                                       std::to_string(q) + ")");
            if (t.h[pp][q] != t.h[m - pp][m - q])
                throw ConsistencyError("Hodge table violates duality at (" +
                                       std::to_string(pp) + "," +
                                       std::to_string(q) + ")");
        }
    return t;
}

long fl_bound(const ModuliParams& p, long K) {
    p.validate();
    const long R = p.index_rank();
    const long v = p.N * K;       // rank of V
    const long w = p.N * K - R;   // rank of W
    const long k = p.N * K - 1;   // degeneracy rank
    if (w <= 0)
        throw std::invalid_argument("fl_bound: K too small, W has rank <= 0");
    return static_cast<long>(p.g - (v - k) * (w - k));
}

SpectralData spectral_numerology(const ModuliParams& p) {
    p.validate();
    SpectralData s;
    s.delta = Int(p.D) + Int(p.N) * (p.N - 1) * (p.g - 1);
    s.genus_Y = Int(p.N) * p.N * (p.g - 1) + 1;
    // Embedding of the moduli space in Sym^{delta+Nd}(Y) over a
    // g-dimensional translate: (delta + Nd) - (g_Y - g) = m.
    s.dim_consistency =
        (s.delta + Int(p.N) * p.d) - (s.genus_Y - p.g) == p.dimension();
    return s;
}

}  // namespace bnmod
