#pragma once

#include <stdexcept>
#include <vector>

#include "bnmod/combinatorics.hpp"
#include "bnmod/rational.hpp"

namespace bnmod {

// Characteristic-class calculus on virtual bundles, generic over the
// ambient truncated graded ring. The ring type C must provide value
// semantics, +, -, *, scaled(Rational), component(real_degree), unit(),
// is_zero() and top_real_degree(). All Chern data lives in even degrees;
// ch_k denotes the component of real degree 2k.
template <class C>
struct VirtualBundle {
    Int rank = 0;
    C chern_character;  // degree-0 part equals rank
};

template <class C>
VirtualBundle<C> make_bundle(const Int& rank, const C& positive_part) {
    VirtualBundle<C> v;
    v.rank = rank;
    v.chern_character = positive_part.unit().scaled(Rational(rank)) +
                        (positive_part - positive_part.component(0));
    return v;
}

// exp of a nilpotent element (no degree-0 part).
template <class C>
C exp_nilpotent(const C& u) {
    if (!u.component(0).is_zero())
        throw std::invalid_argument("exp_nilpotent: nonzero degree-0 part");
    C result = u.unit();
    C term = u.unit();
    Rational kfact = 1;
    for (int k = 1; k <= u.top_real_degree() + 1 && !term.is_zero(); ++k) {
        term = term * u;
        kfact *= k;
        result = result + term.scaled(Rational(1) / kfact);
    }
    return result;
}

// Power sums p_k = k! ch_k for k = 1..kmax.
template <class C>
std::vector<C> power_sums(const C& ch) {
    const int kmax = ch.top_real_degree() / 2;
    std::vector<C> p;
    p.reserve(kmax + 1);
    p.push_back(ch.component(0));  // unused slot, keeps 1-based indexing
    for (int k = 1; k <= kmax; ++k)
        p.push_back(ch.component(2 * k).scaled(Rational(factorial(k))));
    return p;
}

// Total Chern class from the Chern character via Newton's identities:
// c_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} c_{k-i} p_i.
template <class C>
C chern_from_character(const VirtualBundle<C>& v) {
    const auto p = power_sums(v.chern_character);
    const int kmax = static_cast<int>(p.size()) - 1;
    std::vector<C> c;
    c.push_back(v.chern_character.unit());
    C total = c[0];
    for (int k = 1; k <= kmax; ++k) {
        C acc = p[k];  // i = k term uses c_0 = 1
        for (int i = 1; i < k; ++i) {
            C t = c[k - i] * p[i];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        // The i = k term above carried sign (-1)^{k-1} folded in below.
        if (k % 2 == 0) acc = acc - p[k] - p[k];  // fix sign of the c_0 term
        c.push_back(acc.scaled(Rational(1, k)));
        total = total + c[k];
    }
    return total;
}

// Inverse of chern_from_character: recovers the Chern character of the
// unique virtual bundle of the given rank with total Chern class c
// (degree-0 part of c must be 1).
template <class C>
VirtualBundle<C> character_from_chern(const C& c, const Int& rank) {
    if (!(c.component(0) == c.unit()))
        throw std::invalid_argument(
            "character_from_chern: degree-0 part must be 1");
    const int kmax = c.top_real_degree() / 2;
    std::vector<C> e;
    for (int k = 0; k <= kmax; ++k) e.push_back(c.component(2 * k));
    // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k.
    std::vector<C> p(1, c.unit());
    C ch = c.unit().scaled(Rational(rank));
    for (int k = 1; k <= kmax; ++k) {
        C acc = e[k].scaled(Rational((k % 2 == 1) ? k : -k));
        for (int i = 1; i < k; ++i) {
            C t = e[i] * p[k - i];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        p.push_back(acc);
        ch = ch + p[k].scaled(Rational(1, factorial(k)));
    }
    VirtualBundle<C> v;
    v.rank = rank;
    v.chern_character = ch;
    return v;
}

// Todd class, computed additively in power sums: Td = exp(sum tau_k p_k)
// with tau the series coefficients of log(x/(1-e^{-x})). Valid for
// virtual bundles of any rank.
template <class C>
C todd_class(const VirtualBundle<C>& v) {
    const auto p = power_sums(v.chern_character);
    const int kmax = static_cast<int>(p.size()) - 1;
    const auto tau = log_todd_coefficients(kmax);
    C log_td = v.chern_character.unit().scaled(0);
    for (int k = 1; k <= kmax; ++k) log_td = log_td + p[k].scaled(tau[k]);
    return exp_nilpotent(log_td);
}

// Total Chern class of (line bundle with c_1 = h) tensor V:
// sum_k sum_l C(rank V - l, k - l) h^{k-l} c_l(V). Valid for virtual V.
template <class C>
C twist_total_chern(const C& h, const VirtualBundle<C>& v) {
    const C c = chern_from_character(v);
    const int kmax = c.top_real_degree() / 2;
    C result = c.unit().scaled(0);
    std::vector<C> hpow{c.unit()};
    for (int j = 1; j <= kmax; ++j) hpow.push_back(hpow.back() * h);
    for (int l = 0; l <= kmax; ++l) {
        const C cl = c.component(2 * l);
        if (cl.is_zero()) continue;
        for (int k = l; k <= kmax; ++k) {
            Rational coef = binom_general(v.rank - l, k - l);
            if (coef == 0) continue;
            result = result + (cl * hpow[k - l]).scaled(coef);
        }
    }
    return result;
}

// ch_k -> (-1)^k ch_k; rank preserved.
template <class C>
VirtualBundle<C> dualize(const VirtualBundle<C>& v) {
    const int kmax = v.chern_character.top_real_degree() / 2;
    C ch = v.chern_character.component(0);
    for (int k = 1; k <= kmax; ++k) {
        C part = v.chern_character.component(2 * k);
        ch = (k % 2 == 0) ? ch + part : ch - part;
    }
    VirtualBundle<C> r;
    r.rank = v.rank;
    r.chern_character = ch;
    return r;
}

namespace detail {

// Polynomials in the auxiliary variable t with coefficients in the ring C,
// truncated at t-degree tmax. Used only by lambda_power_character.
template <class C>
using TPoly = std::vector<C>;

template <class C>
TPoly<C> tpoly_mul(const TPoly<C>& a, const TPoly<C>& b, int tmax) {
    TPoly<C> r(tmax + 1, a[0].scaled(0));
    for (int i = 0; i <= tmax; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= tmax; ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

}  // namespace detail

// Chern character of the p-th exterior power, via the lambda-ring
// generating function log(sum_p ch(Lambda^p V) t^p) =
// rank log(1+t) + sum_{k>=1} f_k(t) p_k(V), which is additive in the
// power sums and therefore valid for virtual bundles.
template <class C>
VirtualBundle<C> lambda_power_character(const VirtualBundle<C>& v, int p) {
    if (p < 0) throw std::invalid_argument("lambda power: negative p");
    const int kmax = v.chern_character.top_real_degree() / 2;
    const int tmax = p;

    // Scalar t-series: 1/(1+t) and (1+t)^rank.
    std::vector<Rational> inv1pt(tmax + 1);
    for (int i = 0; i <= tmax; ++i) inv1pt[i] = (i % 2 == 0) ? 1 : -1;
    std::vector<Rational> onept_rank(tmax + 1);
    for (int i = 0; i <= tmax; ++i) onept_rank[i] = binom_general(v.rank, i);

    // f_k(t) = [x^k] log(1 + t e^x) - [k=0] log(1+t)
    //        = [x^k] log(1 + A(x,t)) with A = t (e^x - 1)/(1+t).
    // A_k(t) = (t/(1+t)) / k! for k >= 1.
    std::vector<Rational> t_over_1pt(tmax + 1, Rational(0));
    for (int i = 1; i <= tmax; ++i) t_over_1pt[i] = inv1pt[i - 1];

    using TP = std::vector<std::vector<Rational>>;  // x-deg -> t-poly
    auto tzero = std::vector<Rational>(tmax + 1, Rational(0));
    TP A(kmax + 1, tzero);
    for (int k = 1; k <= kmax; ++k) {
        Rational invfact(1, factorial(k));
        for (int i = 0; i <= tmax; ++i) A[k][i] = t_over_1pt[i] * invfact;
    }
    TP f(kmax + 1, tzero);
    TP Apow(kmax + 1, tzero);
    Apow[0] = std::vector<Rational>(tmax + 1, Rational(0));
    Apow[0][0] = 1;  // A^0 = 1
    for (int m = 1; m <= kmax; ++m) {
        // Apow <- Apow * A (x-truncated at kmax, t-truncated at tmax).
        TP next(kmax + 1, tzero);
        for (int i = 0; i <= kmax; ++i)
            for (int j = 1; i + j <= kmax; ++j)
                for (int s = 0; s <= tmax; ++s) {
                    if (Apow[i][s] == 0) continue;
                    for (int u = 0; s + u <= tmax; ++u)
                        next[i + j][s + u] += Apow[i][s] * A[j][u];
                }
        Apow = next;
        Rational sign = (m % 2 == 1) ? Rational(1) : Rational(-1);
        for (int k = 1; k <= kmax; ++k)
            for (int s = 0; s <= tmax; ++s)
                f[k][s] += sign * Apow[k][s] / m;
    }

    // S = sum_k f_k(t) p_k(V): a t-polynomial with ring coefficients.
    const auto psums = power_sums(v.chern_character);
    const C zero = v.chern_character.unit().scaled(0);
    detail::TPoly<C> S(tmax + 1, zero);
    for (int k = 1; k <= kmax; ++k)
        for (int s = 1; s <= tmax; ++s)
            S[s] = S[s] + psums[k].scaled(f[k][s]);

    // lambda_t(V) = (1+t)^rank exp(S); every term of S has positive
    // t-degree and positive ring degree, so exp terminates.
    detail::TPoly<C> E(tmax + 1, zero);
    E[0] = v.chern_character.unit();
    detail::TPoly<C> term = E;
    Rational kfact = 1;
    for (int k = 1; k <= tmax; ++k) {
        term = detail::tpoly_mul(term, S, tmax);
        kfact *= k;
        for (int s = 0; s <= tmax; ++s)
            E[s] = E[s] + term[s].scaled(Rational(1) / kfact);
    }

    C ch = zero;
    for (int s = 0; s <= p; ++s)
        ch = ch + E[s].scaled(onept_rank[p - s]);

    VirtualBundle<C> r;
    r.rank = binom_int(v.rank, p);
    r.chern_character = ch;
    return r;
}

}  // namespace bnmod
